#pragma once

// Reference data for the acceptance suite: the published threshold tables
// for diag(...) + diag(0^k) into diag(1^n) / diag(1^(n-1),lambda), the
// existence milestones, and the explicit nonexistence cases.  Rows whose
// printed closed form is known to deviate from the decision procedure are
// listed in kKnownErrata; the acceptance run re-derives every deviation
// and records it in the generated ERRATA report.

#include <string>
#include <vector>

#include "qpembed/embed.hpp"

namespace fixtures {

using qpembed::TargetFamily;

// Applicability of a threshold list, in terms of m = n - 2k.
enum class Regime { All, MMod4Is01, MMod4Is23 };

struct ThresholdRow {
    std::string id;    // section/form
    std::string form;  // nondegenerate part, DSL body
    int offset;        // embeds iff k <= (n - offset)/2
};

struct ThresholdSection {
    std::string name;
    int residue;  // p mod 4
    TargetFamily family;
    Regime regime;
    std::vector<ThresholdRow> rows;
};

inline std::vector<ThresholdSection> threshold_sections() {
    using F = TargetFamily;
    std::vector<ThresholdSection> out;

    out.push_back({"euclid-p1", 1, F::Euclidean, Regime::All,
                   {
                       {"euclid-p1/diag(1)", "diag(1)", 1},
                       {"euclid-p1/diag(l)", "diag(l)", 2},
                       {"euclid-p1/diag(p)", "diag(p)", 2},
                       {"euclid-p1/diag(lp)", "diag(lp)", 2},
                       {"euclid-p1/diag(1,1)", "diag(1,1)", 2},
                       {"euclid-p1/diag(1,l)", "diag(1,l)", 3},
                       {"euclid-p1/diag(1,p)", "diag(1,p)", 3},
                       {"euclid-p1/diag(1,lp)", "diag(1,lp)", 3},
                       {"euclid-p1/diag(l,p)", "diag(l,p)", 4},
                       {"euclid-p1/diag(l,lp)", "diag(l,lp)", 4},
                       {"euclid-p1/diag(p,lp)", "diag(p,lp)", 4},
                       {"euclid-p1/diag(1,1,1)", "diag(1,1,1)", 3},
                       {"euclid-p1/diag(1,1,l)", "diag(1,1,l)", 4},
                       {"euclid-p1/diag(1,1,p)", "diag(1,1,p)", 4},
                       {"euclid-p1/diag(1,1,lp)", "diag(1,1,lp)", 4},
                       {"euclid-p1/diag(1,l,p)", "diag(1,l,p)", 5},
                       {"euclid-p1/diag(1,l,lp)", "diag(1,l,lp)", 5},
                       {"euclid-p1/diag(1,p,lp)", "diag(1,p,lp)", 5},
                       {"euclid-p1/diag(l,p,lp)", "diag(l,p,lp)", 6},
                   }});

    out.push_back({"lorentz-p1", 1, F::Lorentzian, Regime::All,
                   {
                       {"lorentz-p1/diag(1)", "diag(1)", 2},
                       {"lorentz-p1/diag(l)", "diag(l)", 1},
                       {"lorentz-p1/diag(p)", "diag(p)", 3},
                       {"lorentz-p1/diag(lp)", "diag(lp)", 3},
                       {"lorentz-p1/diag(1,1)", "diag(1,1)", 3},
                       {"lorentz-p1/diag(1,l)", "diag(1,l)", 2},
                       {"lorentz-p1/diag(1,p)", "diag(1,p)", 4},
                       {"lorentz-p1/diag(1,lp)", "diag(1,lp)", 4},
                       {"lorentz-p1/diag(l,p)", "diag(l,p)", 3},
                       {"lorentz-p1/diag(l,lp)", "diag(l,lp)", 3},
                       {"lorentz-p1/diag(p,lp)", "diag(p,lp)", 5},
                       {"lorentz-p1/diag(1,1,1)", "diag(1,1,1)", 4},
                       {"lorentz-p1/diag(1,1,l)", "diag(1,1,l)", 3},
                       {"lorentz-p1/diag(1,l,p)", "diag(1,l,p)", 4},
                       {"lorentz-p1/diag(1,l,lp)", "diag(1,l,lp)", 4},
                       {"lorentz-p1/diag(1,1,p)", "diag(1,1,p)", 5},
                       {"lorentz-p1/diag(1,1,lp)", "diag(1,1,lp)", 5},
                       {"lorentz-p1/diag(l,p,lp)", "diag(l,p,lp)", 5},
                       {"lorentz-p1/diag(1,p,lp)", "diag(1,p,lp)", 6},
                   }});

    out.push_back({"euclid-p3-list1", 3, F::Euclidean, Regime::MMod4Is01,
                   {
                       {"euclid-p3-list1/diag(1)", "diag(1)", 1},
                       {"euclid-p3-list1/diag(l)", "diag(l)", 2},
                       {"euclid-p3-list1/diag(p)", "diag(p)", 3},
                       {"euclid-p3-list1/diag(lp)", "diag(lp)", 3},
                       {"euclid-p3-list1/diag(1,1)", "diag(1,1)", 2},
                       {"euclid-p3-list1/diag(1,l)", "diag(1,l)", 3},
                       {"euclid-p3-list1/diag(l,p)", "diag(l,p)", 3},
                       {"euclid-p3-list1/diag(l,lp)", "diag(l,lp)", 3},
                       {"euclid-p3-list1/diag(p,p)", "diag(p,p)", 4},
                       {"euclid-p3-list1/diag(1,p)", "diag(1,p)", 4},
                       {"euclid-p3-list1/diag(1,lp)", "diag(1,lp)", 4},
                       {"euclid-p3-list1/diag(1,1,1)", "diag(1,1,1)", 3},
                       {"euclid-p3-list1/diag(p,p,p)", "diag(p,p,p)", 4},
                       {"euclid-p3-list1/diag(1,l,p)", "diag(1,l,p)", 4},
                       {"euclid-p3-list1/diag(1,p,lp)", "diag(1,p,lp)", 4},
                       {"euclid-p3-list1/diag(1,p,p)", "diag(1,p,p)", 5},
                       {"euclid-p3-list1/diag(1,1,p)", "diag(1,1,p)", 5},
                       {"euclid-p3-list1/diag(1,1,lp)", "diag(1,1,lp)", 5},
                       {"euclid-p3-list1/diag(p,p,l)", "diag(p,p,l)", 6},
                   }});

    out.push_back({"euclid-p3-list2", 3, F::Euclidean, Regime::MMod4Is23,
                   {
                       {"euclid-p3-list2/diag(1)", "diag(1)", 2},
                       {"euclid-p3-list2/diag(l)", "diag(l)", 1},
                       {"euclid-p3-list2/diag(p)", "diag(p)", 2},
                       {"euclid-p3-list2/diag(lp)", "diag(lp)", 2},
                       {"euclid-p3-list2/diag(1,1)", "diag(1,1)", 3},
                       {"euclid-p3-list2/diag(1,l)", "diag(1,l)", 2},
                       {"euclid-p3-list2/diag(1,p)", "diag(1,p)", 3},
                       {"euclid-p3-list2/diag(1,lp)", "diag(1,lp)", 3},
                       {"euclid-p3-list2/diag(l,p)", "diag(l,p)", 4},
                       {"euclid-p3-list2/diag(l,lp)", "diag(l,lp)", 4},
                       {"euclid-p3-list2/diag(p,p)", "diag(p,p)", 5},
                       {"euclid-p3-list2/diag(1,1,1)", "diag(1,1,1)", 4},
                       {"euclid-p3-list2/diag(1,p,lp)", "diag(1,p,lp)", 3},
                       {"euclid-p3-list2/diag(1,1,lp)", "diag(1,1,lp)", 4},
                       {"euclid-p3-list2/diag(1,1,p)", "diag(1,1,p)", 4},
                       {"euclid-p3-list2/diag(p,p,p)", "diag(p,p,p)", 5},
                       {"euclid-p3-list2/diag(1,l,p)", "diag(1,l,p)", 5},
                       {"euclid-p3-list2/diag(p,p,l)", "diag(p,p,l)", 5},
                       {"euclid-p3-list2/diag(1,p,p)", "diag(1,p,p)", 6},
                   }});

    out.push_back({"lorentz-p3-list1", 3, F::Lorentzian, Regime::MMod4Is01,
                   {
                       {"lorentz-p3-list1/diag(1)", "diag(1)", 2},
                       {"lorentz-p3-list1/diag(l)", "diag(l)", 1},
                       {"lorentz-p3-list1/diag(p)", "diag(p)", 2},
                       {"lorentz-p3-list1/diag(lp)", "diag(lp)", 2},
                       {"lorentz-p3-list1/diag(1,1)", "diag(1,1)", 3},
                       {"lorentz-p3-list1/diag(1,l)", "diag(1,l)", 2},
                       {"lorentz-p3-list1/diag(1,p)", "diag(1,p)", 3},
                       {"lorentz-p3-list1/diag(1,lp)", "diag(1,lp)", 3},
                       {"lorentz-p3-list1/diag(l,p)", "diag(l,p)", 4},
                       {"lorentz-p3-list1/diag(l,lp)", "diag(l,lp)", 4},
                       {"lorentz-p3-list1/diag(1,lp)#2", "diag(1,lp)", 5},
                       {"lorentz-p3-list1/diag(1,1,1)", "diag(1,1,1)", 4},
                       {"lorentz-p3-list1/diag(1,p,lp)", "diag(1,p,lp)", 3},
                       {"lorentz-p3-list1/diag(1,1,lp)", "diag(1,1,lp)", 4},
                       {"lorentz-p3-list1/diag(1,1,p)", "diag(1,1,p)", 4},
                       {"lorentz-p3-list1/diag(p,p,p)", "diag(p,p,p)", 5},
                       {"lorentz-p3-list1/diag(1,l,p)", "diag(1,l,p)", 5},
                       {"lorentz-p3-list1/diag(p,p,l)", "diag(p,p,l)", 5},
                       {"lorentz-p3-list1/diag(1,p,p)", "diag(1,p,p)", 6},
                   }});

    // In the source table the row here spelled diag(1,lp) carries the
    // token "1, lambda p p"; lambda p^2 falls in the lambda p class times
    // a square, and only the diag(1,lp) reading completes the rank-2 set.
    out.push_back({"lorentz-p3-list2", 3, F::Lorentzian, Regime::MMod4Is23,
                   {
                       {"lorentz-p3-list2/diag(1)", "diag(1)", 1},
                       {"lorentz-p3-list2/diag(l)", "diag(l)", 2},
                       {"lorentz-p3-list2/diag(p)", "diag(p)", 3},
                       {"lorentz-p3-list2/diag(lp)", "diag(lp)", 3},
                       {"lorentz-p3-list2/diag(1,1)", "diag(1,1)", 2},
                       {"lorentz-p3-list2/diag(1,l)", "diag(1,l)", 3},
                       {"lorentz-p3-list2/diag(l,p)", "diag(l,p)", 3},
                       {"lorentz-p3-list2/diag(l,lp)", "diag(l,lp)", 3},
                       {"lorentz-p3-list2/diag(p,p)", "diag(p,p)", 4},
                       {"lorentz-p3-list2/diag(1,p)", "diag(1,p)", 4},
                       {"lorentz-p3-list2/diag(1,lp)", "diag(1,lp)", 4},
                       {"lorentz-p3-list2/diag(1,1,1)", "diag(1,1,1)", 3},
                       {"lorentz-p3-list2/diag(p,p,p)", "diag(p,p,p)", 4},
                       {"lorentz-p3-list2/diag(1,l,p)", "diag(1,l,p)", 4},
                       {"lorentz-p3-list2/diag(1,p,lp)", "diag(1,p,lp)", 4},
                       {"lorentz-p3-list2/diag(1,p,p)", "diag(1,p,p)", 5},
                       {"lorentz-p3-list2/diag(1,1,p)", "diag(1,1,p)", 5},
                       {"lorentz-p3-list2/diag(1,1,lp)", "diag(1,1,lp)", 5},
                       {"lorentz-p3-list2/diag(p,p,l)", "diag(p,p,l)", 6},
                   }});

    return out;
}

// Frozen: rows whose printed closed form deviates from the decision
// procedure somewhere in the sweep window.  Populated from a discovery
// run and verified by hand at representative cells; the acceptance suite
// fails if the actual deviation set ever differs.
std::vector<std::string> known_errata();

// --- existence milestones --------------------------------------------------

struct Milestone {
    std::string form;  // DSL
    int n;             // stated target dimension
    bool exists;
};

struct MilestoneSection {
    int residue;
    TargetFamily family;
    std::vector<Milestone> entries;
};

inline std::vector<MilestoneSection> milestone_sections() {
    using F = TargetFamily;
    std::vector<MilestoneSection> out;

    out.push_back({1, F::Euclidean,
                   {
                       {"diag(1)", 2, true},
                       {"diag(p)", 2, true},
                       {"diag(l)", 2, true},
                       {"diag(lp)", 2, true},
                       {"diag(1,1)", 3, true},
                       {"diag(1,l)", 3, true},
                       {"diag(1,p)", 3, true},
                       {"diag(1,lp)", 3, true},
                       {"diag(l,p)", 4, true},
                       {"diag(l,lp)", 4, true},
                       {"diag(p,lp)", 4, true},
                       {"diag(l,p)", 7, true},
                       {"diag(1,1,1)", 4, true},
                       {"diag(1,1,l)", 4, true},
                       {"diag(1,1,p)", 4, true},
                       {"diag(1,1,lp)", 4, true},
                       {"diag(1,l,p)", 5, true},
                       {"diag(1,l,lp)", 5, true},
                       {"diag(1,p,lp)", 5, true},
                       {"diag(l,p,lp)", 6, true},
                       {"diag(l,p,lp)", 5, false},  // min dimension is 6
                   }});

    out.push_back({1, F::Lorentzian,
                   {
                       {"diag(1)", 2, true},
                       {"diag(l)", 2, true},
                       {"diag(p)", 2, false},
                       {"diag(lp)", 2, false},
                       {"diag(p)", 3, true},
                       {"diag(lp)", 3, true},
                       {"diag(1,1)", 3, true},
                       {"diag(1,l)", 3, true},
                       {"diag(l,p)", 3, true},
                       {"diag(l,lp)", 3, true},
                       {"diag(1,p)", 4, true},
                       {"diag(1,lp)", 4, true},
                       {"diag(p,lp)", 4, false},
                       {"diag(p,lp)", 5, true},
                       {"diag(1,1,1)", 4, true},
                       {"diag(1,1,l)", 4, true},
                       {"diag(1,l,p)", 4, true},
                       {"diag(1,l,lp)", 4, true},
                       {"diag(1,1,1)", 5, true},
                       {"diag(1,1,p)", 5, true},
                       {"diag(1,1,lp)", 5, true},
                       {"diag(l,p,lp)", 5, true},
                       {"diag(1,p,lp)", 6, true},
                       {"diag(1,p,lp)", 5, false},
                   }});

    out.push_back({3, F::Euclidean,
                   {
                       {"diag(1)", 2, true},
                       {"diag(l)", 2, true},
                       {"diag(p)", 2, false},
                       {"diag(lp)", 2, false},
                       {"diag(p)", 3, true},
                       {"diag(lp)", 3, true},
                       {"diag(1,1)", 3, true},
                       {"diag(1,l)", 3, true},
                       {"diag(l,p)", 3, true},
                       {"diag(l,lp)", 3, true},
                       {"diag(p,p)", 4, true},
                       {"diag(1,p)", 4, true},
                       {"diag(1,lp)", 4, true},
                       {"diag(1,1,1)", 4, true},
                       {"diag(p,p,p)", 4, true},
                       {"diag(1,l,p)", 4, true},
                       {"diag(1,p,lp)", 4, true},
                       {"diag(1,p,p)", 5, true},
                       {"diag(1,1,p)", 5, true},
                       {"diag(1,1,lp)", 5, true},
                       {"diag(p,p,l)", 6, true},
                       {"diag(p,p,l)", 5, false},
                   }});

    out.push_back({3, F::Lorentzian,
                   {
                       {"diag(1)", 2, true},
                       {"diag(l)", 2, true},
                       {"diag(p)", 2, true},
                       {"diag(lp)", 2, true},
                       {"diag(1,1)", 3, true},
                       {"diag(1,l)", 3, true},
                       {"diag(1,p)", 3, true},
                       {"diag(1,lp)", 3, true},
                       {"diag(l,p)", 4, true},
                       {"diag(l,lp)", 4, true},
                       {"diag(p,p)", 4, false},
                       {"diag(p,p)", 5, true},
                       {"diag(1,1,1)", 4, true},
                       {"diag(1,p,lp)", 4, true},
                       {"diag(1,1,lp)", 4, true},
                       {"diag(1,1,p)", 4, true},
                       {"diag(1,1,1)", 5, true},
                       {"diag(1,1,p)", 5, true},
                       {"diag(p,p,p)", 5, true},
                       {"diag(1,l,p)", 5, true},
                       {"diag(1,1,lp)", 5, true},
                       {"diag(p,p,l)", 5, true},
                       {"diag(1,p,lp)", 5, true},
                       {"diag(1,p,p)", 6, true},
                       {"diag(1,p,p)", 5, false},
                   }});

    return out;
}

// Named minimal dimensions.
struct MinDim {
    int residue;
    TargetFamily family;
    std::string form;
    int min_n;
};

inline std::vector<MinDim> min_dimension_fixtures() {
    using F = TargetFamily;
    return {
        {1, F::Euclidean, "diag(l,p,lp)", 6}, {1, F::Lorentzian, "diag(p,lp)", 5},
        {3, F::Euclidean, "diag(p,p,l)", 6},  {3, F::Lorentzian, "diag(1,p,p)", 6},
        {1, F::Euclidean, "diag(1^4)", 4},    {1, F::Lorentzian, "diag(l)", 1},
        {1, F::Lorentzian, "diag(1,p,lp)", 6}, {3, F::Euclidean, "diag(1,p,p)", 5},
        {3, F::Lorentzian, "diag(p,p)", 5},   {3, F::Euclidean, "diag(p)", 3},
    };
}

}  // namespace fixtures
