#ifndef QSUPER_REPORT_HPP
#define QSUPER_REPORT_HPP

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "characters.hpp"
#include "errors.hpp"
#include "laurent_poly.hpp"
#include "weights.hpp"

namespace qsuper {

class parse_error : public error {
public:
    using error::error;
};

/// Parses "c1,c2,...,cn" (signed decimals, surrounding whitespace trimmed).
inline weight parse_weight(std::string_view text) {
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
    while (!text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);
    if (text.empty())
        throw parse_error("empty weight");

    std::vector<int> coords;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        // from_chars rejects a leading '+'
        if (!tok.empty() && tok.front() == '+' && tok.size() > 1 && tok[1] != '-')
            tok.remove_prefix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw parse_error("bad weight coordinate '" + std::string(tok) + "' in '" + std::string(text) + "'");
        coords.push_back(v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return weight(std::move(coords));
}

/// Report JSON with keys in a fixed order, so serialization is stable.
using report_json = nlohmann::ordered_json;

inline report_json weight_json(const weight& w) {
    report_json a = report_json::array();
    for (int c : w)
        a.push_back(c);
    return a;
}

/// Terms in lexicographically descending exponent order.
inline report_json terms_json(const laurent_poly& f) {
    report_json a = report_json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        report_json t;
        t["exps"] = it->first;
        t["coeff"] = it->second.str();
        a.push_back(std::move(t));
    }
    return a;
}

/// Expansion entries in lexicographically descending weight order.
inline report_json expansion_json(const schur_expansion& ex) {
    report_json a = report_json::array();
    for (auto it = ex.rbegin(); it != ex.rend(); ++it) {
        report_json t;
        t["weight"] = weight_json(it->first);
        t["coeff"] = it->second.str();
        a.push_back(std::move(t));
    }
    return a;
}

inline std::string expansion_plain(const schur_expansion& ex) {
    std::string out;
    for (auto it = ex.rbegin(); it != ex.rend(); ++it)
        out += "s" + to_string(it->first) + ": " + it->second.str() + "\n";
    return out;
}

/// One row of a theorem sweep.
struct sweep_row {
    weight nu;
    std::size_t ell = 0;
    std::size_t p = 0;
    integer trivial_mult;
    integer sch;
    bool pass = false;
};

inline const char* csv_header = "weight;ell;p;trivial_mult;sch";

inline std::string csv_line(const sweep_row& r) {
    std::string w;
    for (std::size_t i = 0; i < r.nu.rank(); ++i) {
        if (i)
            w += " ";
        w += std::to_string(r.nu[i]);
    }
    return w + ";" + std::to_string(r.ell) + ";" + std::to_string(r.p) + ";" + r.trivial_mult.str() + ";" +
           r.sch.str();
}

inline report_json sweep_row_json(const sweep_row& r) {
    report_json j;
    j["weight"] = weight_json(r.nu);
    j["ell"] = r.ell;
    j["p"] = r.p;
    j["trivial_mult"] = r.trivial_mult.str();
    j["sch"] = r.sch.str();
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

} // namespace qsuper

#endif
