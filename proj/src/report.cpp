#include "permstat/report.hpp"

#include <algorithm>
#include <ostream>

namespace permstat {

nlohmann::json to_json(const ExactRatio& r) { return r.to_string(); }

nlohmann::json to_json(const ProductValue& v) {
    nlohmann::json j = {{"product", v.product.get_str()}, {"root", v.root}};
    if (v.divisor != 1) j["divisor"] = v.divisor.get_str();
    return j;
}

nlohmann::json to_json(const Permutation& p) { return nlohmann::json(std::vector<int>(p.images().begin(), p.images().end())); }

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["n"] = n ? nlohmann::json(*n) : nlohmann::json(nullptr);
    j["inputs"] = inputs;
    j["results"] = results;
    j["status"] = ok ? "ok" : "failed";
    return j;
}

namespace {

std::string scalar_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "undefined";
    if (v.is_object() && v.contains("product") && v.contains("root")) {
        std::string base = v["product"].get<std::string>();
        if (v.contains("divisor")) base += "/" + v["divisor"].get<std::string>();
        return "(" + base + ")^(1/" + std::to_string(v["root"].get<unsigned>()) + ")";
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& e) { return e.is_number_integer(); })) {
        std::string out;
        for (const auto& e : v) out += (out.empty() ? "" : " ") + e.dump();
        return out;
    }
    return v.dump();
}

void write_text(std::ostream& os, const nlohmann::json& results, const std::string& indent) {
    for (auto it = results.begin(); it != results.end(); ++it) {
        const auto& v = it.value();
        const bool perm_array = v.is_array() && !v.empty() && v.front().is_array();
        if (v.is_object() && !(v.contains("product") && v.contains("root"))) {
            os << indent << it.key() << ":\n";
            write_text(os, v, indent + "  ");
        } else if (perm_array || (v.is_array() && !v.empty() && v.front().is_object())) {
            os << indent << it.key() << ":\n";
            for (const auto& e : v) os << indent << "  " << scalar_text(e) << "\n";
        } else {
            os << indent << it.key() << ": " << scalar_text(v) << "\n";
        }
    }
}

}  // namespace

void Report::write(std::ostream& os, OutputFormat format) const {
    switch (format) {
        case OutputFormat::json:
            os << to_json().dump(2) << "\n";
            break;
        case OutputFormat::text:
            if (!text_lines.empty()) {
                for (const auto& line : text_lines) os << line << "\n";
            } else {
                os << "command: " << command << "\n";
                if (n) os << "n: " << *n << "\n";
                write_text(os, results, "");
            }
            os << "status: " << (ok ? "ok" : "failed") << "\n";
            break;
        case OutputFormat::csv:
            if (histogram) {
                os << "bin_lo,bin_hi,count\n";
                for (const auto& bin : *histogram) {
                    os << nlohmann::json(bin.lo).dump() << "," << nlohmann::json(bin.hi).dump() << "," << bin.count
                       << "\n";
                }
            } else {
                os << "key,value\n";
                for (auto it = results.begin(); it != results.end(); ++it) {
                    if (it.value().is_array() && !it.value().empty() && !it.value().front().is_number()) continue;
                    std::string v = scalar_text(it.value());
                    if (v.find(',') != std::string::npos) v = "\"" + v + "\"";
                    os << it.key() << "," << v << "\n";
                }
            }
            break;
    }
}

}  // namespace permstat
