#include "homvar/serialize.hpp"

#include "homvar/parse.hpp"

#include <sstream>

namespace homvar {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string json_string(const std::string& s) {
    return "\"" + json_escape(s) + "\"";
}

std::string to_json(const ScalarForm& f) {
    std::ostringstream os;
    os << "{\"degree\": " << f.degree() << ", \"terms\": [";
    bool first = true;
    for (const auto& [tuple, coeff] : f.terms()) {
        if (!first) os << ", ";
        first = false;
        os << "{\"covectors\": [";
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (i) os << ", ";
            os << json_string(tuple[i].to_string());
        }
        os << "], \"coeff\": " << json_string(print_expr(coeff)) << "}";
    }
    os << "]}";
    return os.str();
}

std::string to_json(const VectorValuedForm& f) {
    std::ostringstream os;
    os << "{\"r\": " << f.form_degree() << ", \"s\": " << f.value_degree()
       << ", \"components\": {";
    bool first = true;
    for (const auto& [frame, phi] : f.components()) {
        if (!first) os << ", ";
        first = false;
        std::string key;
        for (size_t i = 0; i < frame.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(frame[i]);
        }
        os << json_string(key) << ": " << to_json(phi);
    }
    os << "}}";
    return os.str();
}

std::string to_json(const IdentityReport& r) {
    std::ostringstream os;
    os << "{\"name\": " << json_string(r.name)
       << ", \"parameters\": " << json_string(r.parameters)
       << ", \"brute\": " << json_string(to_string(r.brute))
       << ", \"closed\": " << json_string(to_string(r.closed))
       << ", \"pass\": " << (r.pass ? "true" : "false") << "}";
    return os.str();
}

}  // namespace homvar
