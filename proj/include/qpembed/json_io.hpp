#pragma once

#include <json.hpp>

#include "qpembed/embed.hpp"

namespace qpembed {

using Json = nlohmann::ordered_json;

Json form_to_json(const DiagonalForm& f);
DiagonalForm form_from_json(const Json& j, const PrimeContext& ctx);

Json invariants_to_json(const FormInvariants& inv);

// `{"n":3,"m":[[...],[...],[...]]}`; entries are integers or strings "a/b".
GramForm gram_from_json(const Json& j, const PrimeContext& ctx);

Json witness_to_json(const Witness& w);

Json reduced_to_json(const ReducedQuery& rq);

std::string target_token(const TargetSpace& t);

}  // namespace qpembed
