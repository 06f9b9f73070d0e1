#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permstat/permutation.hpp"
#include "permstat/product_value.hpp"
#include "permstat/ratio.hpp"
#include "permstat/sampling.hpp"

namespace permstat {

enum class OutputFormat { json, text, csv };

/// "p/q".
nlohmann::json to_json(const ExactRatio& r);
/// {"product": "<decimal>", "root": r}, plus "divisor" when it is not 1.
nlohmann::json to_json(const ProductValue& v);
/// Integer array in one-line notation.
nlohmann::json to_json(const Permutation& p);

/// One command's output: {"command", "n", "inputs", "results", "status"}.
struct Report {
    std::string command;
    std::optional<int> n;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    bool ok = true;

    /// Replaces the generic key/value rendering in text format.
    std::vector<std::string> text_lines;
    /// Rows for csv format; when absent, scalar results are written as key,value.
    std::optional<std::vector<HistogramBin>> histogram;

    nlohmann::json to_json() const;
    void write(std::ostream& os, OutputFormat format) const;
};

}  // namespace permstat
