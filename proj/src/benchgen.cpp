#include "benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace abaf {

std::uint64_t Rng::below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % n + 1) % n;
    std::uint64_t x;
    do x = engine_();
    while (x > limit);
    return x % n;
}

namespace {

std::size_t scaled(std::size_t n, double ratio) {
    return static_cast<std::size_t>(std::floor(static_cast<double>(n) * ratio + 1e-9));
}

struct Common {
    std::size_t n_atoms;
    double asm_ratio;
    double head_ratio;
    std::size_t mr;
    std::size_t ms;
    std::size_t slack;  // max() for set 1
    std::uint64_t seed;
};

void validate_common(const Common& c) {
    if (c.n_atoms < 2) throw UsageError("n_atoms must be at least 2");
    if (!(c.asm_ratio > 0 && c.asm_ratio < 1)) throw UsageError("asm_ratio must lie in (0,1)");
    if (!(c.head_ratio >= 0 && c.head_ratio <= 1)) throw UsageError("head_ratio must lie in [0,1]");
    if (c.mr < 1 || c.ms < 1) throw UsageError("rule count and rule size bounds must be at least 1");
    const std::size_t k = scaled(c.n_atoms, c.asm_ratio);
    if (k == 0 || k == c.n_atoms) throw UsageError("asm_ratio leaves no assumptions or no other atoms");
}

std::vector<Rule> draw_rules(const Common& c, const std::vector<bool>& is_asm, const std::vector<Atom>& heads,
                             Rng& rng) {
    const std::size_t n = c.n_atoms;
    std::vector<Atom> asms, others;
    for (Atom p = 0; p < n; ++p) (is_asm[p] ? asms : others).push_back(p);

    std::vector<Rule> rules;
    for (Atom h : heads) {
        const std::size_t count = rng.between(1, c.mr);
        for (std::size_t r = 0; r < count; ++r) {
            const std::size_t size = rng.between(1, c.ms);
            std::vector<Atom> body;
            std::size_t non_asm = 0;
            // Draw without replacement; once the slack is used up only
            // assumptions remain eligible.
            for (std::size_t k = 0; k < size; ++k) {
                std::vector<Atom> pool;
                const bool allow_other = non_asm < c.slack;
                for (Atom p = 0; p < n; ++p) {
                    if (p == h || std::find(body.begin(), body.end(), p) != body.end()) continue;
                    if (!is_asm[p] && !allow_other) continue;
                    pool.push_back(p);
                }
                if (pool.empty()) break;
                Atom b = pool[rng.below(pool.size())];
                if (!is_asm[b]) ++non_asm;
                body.push_back(b);
            }
            if (body.empty()) continue;
            rules.push_back({h, std::move(body)});
        }
    }
    return rules;
}

Framework generate_once(const Common& c, Rng& rng) {
    const std::size_t n = c.n_atoms;
    const std::size_t k = scaled(n, c.asm_ratio);

    std::vector<Atom> order(n);
    std::iota(order.begin(), order.end(), Atom{0});
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
    std::vector<Atom> assumptions(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(assumptions.begin(), assumptions.end());
    std::vector<bool> is_asm(n, false);
    for (Atom a : assumptions) is_asm[a] = true;

    std::vector<Atom> shuffled = assumptions;
    for (std::size_t i = shuffled.size() - 1; i > 0; --i) std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
    const std::size_t eligible = scaled(k, c.head_ratio);
    std::vector<bool> head_ok(n, false);
    for (std::size_t i = 0; i < eligible; ++i) head_ok[shuffled[i]] = true;

    std::vector<Atom> heads;
    for (Atom p = 0; p < n; ++p)
        if (!is_asm[p] || head_ok[p]) heads.push_back(p);

    std::vector<Rule> rules = draw_rules(c, is_asm, heads, rng);

    std::vector<Framework::Contrary> contraries;
    for (Atom a : assumptions) contraries.push_back({a, static_cast<Atom>(rng.below(n))});

    std::vector<Atom> others;
    for (Atom p = 0; p < n; ++p)
        if (!is_asm[p]) others.push_back(p);
    Atom query = others[rng.below(others.size())];

    Framework fw(n, std::move(rules), std::move(assumptions), contraries);
    fw.set_default_query(query);
    return fw;
}

Framework generate(const Common& c) {
    Rng rng(c.seed);
    Framework fw = generate_once(c, rng);
    if (c.head_ratio > 0 && fw.classify().flat) fw = generate_once(c, rng);
    return fw;
}

Common common(const GenParams1& p) {
    return {p.n_atoms, p.asm_ratio, p.head_ratio, p.max_rules_per_atom, p.max_rule_size,
            std::numeric_limits<std::size_t>::max(), p.seed};
}

Common common(const GenParams2& p) {
    return {p.n_atoms, p.asm_ratio, p.head_ratio, p.max_rules_per_atom, p.max_rule_size, p.slack, p.seed};
}

std::string ratio_text(double r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

}  // namespace

void validate(const GenParams1& p) { validate_common(common(p)); }
void validate(const GenParams2& p) { validate_common(common(p)); }

Framework gen_set1(const GenParams1& p) {
    validate(p);
    return generate(common(p));
}

Framework gen_set2(const GenParams2& p) {
    validate(p);
    return generate(common(p));
}

std::string instance_name(const GenParams1& p) {
    return "set1_n" + std::to_string(p.n_atoms) + "_a" + ratio_text(p.asm_ratio) + "_h" + ratio_text(p.head_ratio) +
           "_r" + std::to_string(p.max_rules_per_atom) + "_s" + std::to_string(p.max_rule_size) + "_" +
           std::to_string(p.seed) + ".aba";
}

std::string instance_name(const GenParams2& p) {
    return "set2_n" + std::to_string(p.n_atoms) + "_a" + ratio_text(p.asm_ratio) + "_h" + ratio_text(p.head_ratio) +
           "_r" + std::to_string(p.max_rules_per_atom) + "_s" + std::to_string(p.max_rule_size) + "_k" +
           std::to_string(p.slack) + "_" + std::to_string(p.seed) + ".aba";
}

std::vector<GenParams1> grid_set1(const std::vector<std::size_t>& n_atoms, std::size_t per_cell,
                                  std::uint64_t base_seed) {
    std::vector<GenParams1> out;
    std::uint64_t cell = 0;
    for (std::size_t n : n_atoms)
        for (double ar : {0.2, 0.4})
            for (double hr : {0.2, 0.5})
                for (std::size_t mr : {1, 2, 5})
                    for (std::size_t ms : {1, 2, 5}) {
                        for (std::size_t i = 0; i < per_cell; ++i)
                            out.push_back({n, ar, hr, mr, ms, base_seed + cell * per_cell + i});
                        ++cell;
                    }
    return out;
}

std::vector<GenParams2> grid_set2(const std::vector<std::size_t>& n_atoms, std::size_t per_cell,
                                  std::uint64_t base_seed) {
    std::vector<GenParams2> out;
    std::uint64_t cell = 0;
    for (std::size_t n : n_atoms)
        for (double ar : {0.2, 0.4})
            for (double hr : {0.2, 0.5})
                for (std::size_t mr : {2, 5})
                    for (std::size_t ms : {2, 5})
                        for (std::size_t slack : {0, 1, 2}) {
                            for (std::size_t i = 0; i < per_cell; ++i)
                                out.push_back({n, ar, hr, mr, ms, slack, base_seed + cell * per_cell + i});
                            ++cell;
                        }
    return out;
}

ManifestEntry manifest_entry(const GenParams1& p) {
    return {instance_name(p), 1, p.n_atoms, p.asm_ratio, p.head_ratio, p.max_rules_per_atom, p.max_rule_size, 0,
            p.seed};
}

ManifestEntry manifest_entry(const GenParams2& p) {
    return {instance_name(p), 2, p.n_atoms, p.asm_ratio, p.head_ratio, p.max_rules_per_atom, p.max_rule_size,
            p.slack, p.seed};
}

std::string manifest_header() { return "file,set,n_atoms,asm_ratio,head_ratio,mr,ms,slack,seed"; }

std::string manifest_row(const ManifestEntry& e) {
    std::ostringstream out;
    out << e.file << ',' << e.set << ',' << e.n_atoms << ',' << e.asm_ratio << ',' << e.head_ratio << ','
        << e.max_rules_per_atom << ',' << e.max_rule_size << ',' << e.slack << ',' << e.seed;
    return out.str();
}

}  // namespace abaf
