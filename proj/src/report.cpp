#include "hermpsh/report.hpp"

#include <cstdio>
#include <sstream>

namespace hermpsh {

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["input"] = input;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = c.passed ? "pass" : "fail";
        e["detail"] = c.detail;
        cs.push_back(std::move(e));
    }
    j["checks"] = std::move(cs);
    j["result"] = result;
    j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
    j["version"] = std::string(kVersion);
    if (timings) j["timings"] = *timings;
    return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::string Report::text() const {
    std::ostringstream out;
    out << "hermpsh " << kVersion << " " << command << "\n";
    if (seed) out << "seed: " << *seed << "\n";
    for (const auto& c : checks)
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    for (const auto& [key, value] : result.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    if (timings)
        for (const auto& [key, value] : timings->items()) out << "time." << key << ": " << value.dump() << "\n";
    out << (all_passed() ? "result: PASS" : "result: FAIL") << "\n";
    return out.str();
}

std::string input_digest(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace hermpsh
