#include "iccma_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace abaf {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return v;
}

}  // namespace

Framework parse_iccma(std::string_view text) {
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Atom> assumptions;
    std::vector<Framework::Contrary> contraries;
    std::vector<Rule> rules;
    std::vector<bool> has_contrary;
    std::optional<Atom> query;

    auto atom = [&](std::string_view tok, std::size_t line_no) -> Atom {
        std::uint64_t v = parse_uint(tok, line_no);
        if (v < 1 || v > n)
            throw ParseError(line_no, "atom index " + std::string(tok) + " out of range 1.." + std::to_string(n));
        return static_cast<Atom>(v - 1);
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0].front() == '#') {
            if (toks.size() == 3 && toks[0] == "#" && toks[1] == "query" && have_header) query = atom(toks[2], line_no);
            continue;
        }
        if (!have_header) {
            if (toks.size() != 3 || toks[0] != "p" || toks[1] != "aba")
                throw ParseError(line_no, "expected header 'p aba <n>'");
            n = parse_uint(toks[2], line_no);
            if (n == 0) throw ParseError(line_no, "header declares no atoms");
            have_header = true;
            has_contrary.assign(n, false);
            continue;
        }
        const std::string_view kind = toks[0];
        if (kind == "p") {
            throw ParseError(line_no, "duplicate header");
        } else if (kind == "a") {
            if (toks.size() != 2) throw ParseError(line_no, "assumption line takes one atom");
            assumptions.push_back(atom(toks[1], line_no));
        } else if (kind == "c") {
            if (toks.size() != 3) throw ParseError(line_no, "contrary line takes two atoms");
            Atom a = atom(toks[1], line_no);
            Atom c = atom(toks[2], line_no);
            if (has_contrary[a]) throw ParseError(line_no, "duplicate contrary for atom " + std::string(toks[1]));
            has_contrary[a] = true;
            contraries.push_back({a, c});
        } else if (kind == "r") {
            if (toks.size() < 2) throw ParseError(line_no, "rule line needs a head");
            Rule r;
            r.head = atom(toks[1], line_no);
            for (std::size_t k = 2; k < toks.size(); ++k) r.body.push_back(atom(toks[k], line_no));
            rules.push_back(std::move(r));
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (!have_header) throw ParseError(0, "missing 'p aba <n>' header");
    if (assumptions.empty()) throw ParseError(0, "framework declares no assumptions");

    try {
        Framework fw(n, std::move(rules), std::move(assumptions), contraries);
        fw.set_default_query(query);
        return fw;
    } catch (const UsageError& e) {
        throw ParseError(0, e.what());
    }
}

Framework parse_iccma_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_iccma(ss.str());
}

std::string to_iccma(const Framework& fw) {
    std::string out = "p aba " + std::to_string(fw.declared_atoms()) + "\n";
    if (auto q = fw.default_query()) out += "# query " + std::to_string(*q + 1) + "\n";
    for (Atom a : fw.assumptions()) out += "a " + std::to_string(a + 1) + "\n";
    for (Atom a : fw.assumptions())
        if (fw.has_declared_contrary(a))
            out += "c " + std::to_string(a + 1) + " " + std::to_string(fw.contrary(a) + 1) + "\n";
    for (const auto& r : fw.rules()) {
        out += "r " + std::to_string(r.head + 1);
        for (Atom b : r.body) out += " " + std::to_string(b + 1);
        out += "\n";
    }
    return out;
}

}  // namespace abaf
