#include "octa/io.hpp"

namespace octa {

namespace detail {
extern const char* const kBuiltinData;
}

const std::vector<Builtin>& builtins() {
    static const std::vector<Builtin> all = [] {
        std::vector<Builtin> out;
        json j = json::parse(detail::kBuiltinData);
        for (const json& b : j.at("builtins")) {
            Builtin x;
            x.name = b.at("name").get<std::string>();
            x.pd = b.at("pd").get<std::string>();
            for (const json& s : b.at("solutions")) x.solutions.push_back(assignment_from_json(s));
            out.push_back(std::move(x));
        }
        return out;
    }();
    return all;
}

const Builtin& builtin(const std::string& name) {
    for (const Builtin& b : builtins())
        if (b.name == name) return b;
    std::string known;
    for (const Builtin& b : builtins()) known += (known.empty() ? "" : ", ") + b.name;
    throw Error(ErrorKind::Config, "unknown builtin '" + name + "' (known: " + known + ")");
}

}  // namespace octa
