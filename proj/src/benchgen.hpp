#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "framework.hpp"

namespace abaf {

/// mt19937_64 with rejection-sampled bounded draws, so generated instances
/// depend only on the seed and not on the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 engine_;
};

struct GenParams1 {
    std::size_t n_atoms = 80;
    double asm_ratio = 0.2;
    /// Fraction of assumptions eligible to head rules.
    double head_ratio = 0.2;
    std::size_t max_rules_per_atom = 1;
    std::size_t max_rule_size = 1;
    std::uint64_t seed = 0;
};

struct GenParams2 {
    std::size_t n_atoms = 80;
    double asm_ratio = 0.2;
    double head_ratio = 0.2;
    std::size_t max_rules_per_atom = 2;
    std::size_t max_rule_size = 2;
    /// Non-assumption atoms allowed per rule body.
    std::size_t slack = 0;
    std::uint64_t seed = 0;
};

/// Throw UsageError on invalid parameters.
void validate(const GenParams1& p);
void validate(const GenParams2& p);

/// Generated frameworks carry a default query over the non-assumption atoms.
Framework gen_set1(const GenParams1& p);
Framework gen_set2(const GenParams2& p);

std::string instance_name(const GenParams1& p);
std::string instance_name(const GenParams2& p);

struct ManifestEntry {
    std::string file;
    int set = 1;
    std::size_t n_atoms = 0;
    double asm_ratio = 0;
    double head_ratio = 0;
    std::size_t max_rules_per_atom = 0;
    std::size_t max_rule_size = 0;
    std::size_t slack = 0;
    std::uint64_t seed = 0;
};

/// Parameter grids. Each cell gets `per_cell` instances with consecutive
/// seeds starting at `base_seed + per_cell * cell_index`.
std::vector<GenParams1> grid_set1(const std::vector<std::size_t>& n_atoms, std::size_t per_cell,
                                  std::uint64_t base_seed);
std::vector<GenParams2> grid_set2(const std::vector<std::size_t>& n_atoms, std::size_t per_cell,
                                  std::uint64_t base_seed);

ManifestEntry manifest_entry(const GenParams1& p);
ManifestEntry manifest_entry(const GenParams2& p);
std::string manifest_header();
std::string manifest_row(const ManifestEntry& e);

}  // namespace abaf
