#pragma once

#include "homvar/identities.hpp"
#include "homvar/variational.hpp"

#include <string>

namespace homvar {

std::string json_escape(const std::string& s);
std::string json_string(const std::string& s);

// {"degree": r, "terms": [{"covectors": [...], "coeff": "<expr>"}]}
std::string to_json(const ScalarForm& f);

// {"r": ..., "s": ..., "components": {"i1,i2,...": <scalar form>}}
std::string to_json(const VectorValuedForm& f);

// {"name": ..., "parameters": ..., "brute": ..., "closed": ..., "pass": ...}
std::string to_json(const IdentityReport& r);

}  // namespace homvar
