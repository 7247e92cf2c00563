#include "abaf/abaf.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "benchgen.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "iccma_io.hpp"
#include "instantiate.hpp"
#include "oracle.hpp"

struct abaf_framework {
    abaf::Framework fw;
};
struct abaf_core {
    abaf::CoreBaf baf;
};
struct abaf_result {
    abaf::RunReport report;
};
struct abaf_extensions {
    std::vector<abaf::AssumptionSet> sets;
};

namespace {

thread_local std::string g_last_error;

abaf_status fail(abaf_status s, const char* what) {
    g_last_error = what;
    return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
abaf_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return ABAF_OK;
    } catch (const abaf::ParseError& e) {
        return fail(ABAF_ERR_PARSE, e.what());
    } catch (const abaf::UsageError& e) {
        return fail(ABAF_ERR_USAGE, e.what());
    } catch (const abaf::ResourceLimit& e) {
        return fail(ABAF_ERR_RESOURCE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ABAF_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(ABAF_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* name) {
    if (!p) throw abaf::UsageError(std::string(name) + " must not be null");
}

abaf::Semantics to_sem(abaf_semantics s) {
    switch (s) {
        case ABAF_SEM_ADM: return abaf::Semantics::Adm;
        case ABAF_SEM_COM: return abaf::Semantics::Com;
        case ABAF_SEM_PRF: return abaf::Semantics::Prf;
        case ABAF_SEM_GRD: return abaf::Semantics::Grd;
        case ABAF_SEM_STB: return abaf::Semantics::Stb;
    }
    throw abaf::UsageError("invalid semantics");
}

abaf_engine from_engine(abaf::Engine e) {
    switch (e) {
        case abaf::Engine::Baf: return ABAF_ENGINE_BAF;
        case abaf::Engine::Direct: return ABAF_ENGINE_DIRECT;
        case abaf::Engine::Oracle: return ABAF_ENGINE_ORACLE;
    }
    return ABAF_ENGINE_DEFAULT;
}

abaf::Atom to_atom(const abaf::Framework& fw, uint32_t a) {
    if (a == 0 || a > fw.declared_atoms()) throw abaf::UsageError("unknown atom " + std::to_string(a));
    return a - 1;
}

std::size_t copy_set(const abaf::AssumptionSet& s, uint32_t* buf, size_t cap) {
    std::size_t n = 0;
    s.for_each([&](std::size_t a) {
        if (buf && n < cap) buf[n] = static_cast<uint32_t>(a + 1);
        ++n;
    });
    return n;
}

abaf::GenParams1 params1(const abaf_gen_params& p) {
    return {p.n_atoms, p.asm_ratio, p.head_ratio, p.max_rules_per_atom, p.max_rule_size, p.seed};
}
abaf::GenParams2 params2(const abaf_gen_params& p) {
    return {p.n_atoms, p.asm_ratio, p.head_ratio, p.max_rules_per_atom, p.max_rule_size, p.slack, p.seed};
}
void check_set(int set) {
    if (set != 1 && set != 2) throw abaf::UsageError("benchmark set must be 1 or 2");
}

}  // namespace

extern "C" {

const char* abaf_last_error(void) { return g_last_error.c_str(); }
const char* abaf_version(void) { return "0.1.0"; }
void abaf_string_free(char* s) { std::free(s); }

abaf_status abaf_parse_semantics(const char* name, abaf_semantics* out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        auto sem = abaf::parse_semantics(name);
        if (!sem) throw abaf::UsageError(std::string("unknown semantics '") + name + "'");
        *out = static_cast<abaf_semantics>(static_cast<int>(*sem));
    });
}

abaf_status abaf_parse_engine(const char* name, abaf_engine* out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        auto e = abaf::parse_engine(name);
        if (!e) throw abaf::UsageError(std::string("unknown engine '") + name + "'");
        *out = from_engine(*e);
    });
}

const char* abaf_semantics_name(abaf_semantics sem) {
    switch (sem) {
        case ABAF_SEM_ADM: return "adm";
        case ABAF_SEM_COM: return "com";
        case ABAF_SEM_PRF: return "prf";
        case ABAF_SEM_GRD: return "grd";
        case ABAF_SEM_STB: return "stb";
    }
    return "?";
}

const char* abaf_engine_name(abaf_engine engine) {
    switch (engine) {
        case ABAF_ENGINE_DEFAULT: return "default";
        case ABAF_ENGINE_BAF: return "baf";
        case ABAF_ENGINE_DIRECT: return "direct";
        case ABAF_ENGINE_ORACLE: return "oracle";
    }
    return "?";
}

abaf_status abaf_framework_parse(const char* text, size_t len, abaf_framework** out) {
    return guarded([&] {
        require(out, "out");
        if (len) require(text, "text");
        *out = new abaf_framework{abaf::parse_iccma(text ? std::string_view(text, len) : std::string_view())};
    });
}

abaf_status abaf_framework_load(const char* path, abaf_framework** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new abaf_framework{abaf::parse_iccma_file(path)};
    });
}

void abaf_framework_free(abaf_framework* fw) { delete fw; }

abaf_status abaf_framework_serialize(const abaf_framework* fw, char** out) {
    return guarded([&] {
        require(fw, "fw");
        require(out, "out");
        *out = dup_string(abaf::to_iccma(fw->fw));
    });
}

size_t abaf_framework_num_atoms(const abaf_framework* fw) { return fw ? fw->fw.declared_atoms() : 0; }
size_t abaf_framework_num_assumptions(const abaf_framework* fw) { return fw ? fw->fw.num_assumptions() : 0; }
size_t abaf_framework_num_rules(const abaf_framework* fw) { return fw ? fw->fw.rules().size() : 0; }

int abaf_framework_default_query(const abaf_framework* fw, uint32_t* atom) {
    if (!fw || !fw->fw.default_query()) return 0;
    if (atom) *atom = *fw->fw.default_query() + 1;
    return 1;
}

abaf_status abaf_framework_classify(const abaf_framework* fw, int* flat, int* atomic, int* additive) {
    return guarded([&] {
        require(fw, "fw");
        auto info = fw->fw.classify();
        if (flat) *flat = info.flat;
        if (atomic) *atomic = info.atomic;
        if (additive) *additive = info.additive;
    });
}

void abaf_solve_options_init(abaf_solve_options* opt) {
    if (!opt) return;
    opt->engine = ABAF_ENGINE_DEFAULT;
    opt->prune = 1;
    opt->dump_cnf_path = nullptr;
}

abaf_status abaf_solve(const abaf_framework* fw, abaf_semantics sem, uint32_t query, const abaf_solve_options* opt,
                       abaf_result** out) {
    return guarded([&] {
        require(fw, "fw");
        require(out, "out");
        abaf_solve_options o;
        abaf_solve_options_init(&o);
        if (opt) o = *opt;

        abaf::SolveOptions so;
        switch (o.engine) {
            case ABAF_ENGINE_DEFAULT: break;
            case ABAF_ENGINE_BAF: so.engine = abaf::Engine::Baf; break;
            case ABAF_ENGINE_DIRECT: so.engine = abaf::Engine::Direct; break;
            case ABAF_ENGINE_ORACLE: so.engine = abaf::Engine::Oracle; break;
            default: throw abaf::UsageError("invalid engine");
        }
        so.prune = o.prune != 0;
        abaf::CnfFormula cnf;
        if (o.dump_cnf_path) so.dump = &cnf;

        auto result = std::make_unique<abaf_result>();
        result->report = abaf::solve_query(fw->fw, to_sem(sem), to_atom(fw->fw, query), so);
        if (o.dump_cnf_path) {
            if (result->report.engine != abaf::Engine::Baf)
                throw abaf::UsageError("a CNF dump is only produced by the baf engine");
            std::ofstream f(o.dump_cnf_path);
            if (!f) throw abaf::UsageError(std::string("cannot write ") + o.dump_cnf_path);
            cnf.write_dimacs(f);
        }
        *out = result.release();
    });
}

int abaf_result_accepted(const abaf_result* r) { return r && r->report.accepted; }
int abaf_result_has_witness(const abaf_result* r) { return r && r->report.witness.has_value(); }

size_t abaf_result_witness(const abaf_result* r, uint32_t* buf, size_t cap) {
    if (!r || !r->report.witness) return 0;
    return copy_set(*r->report.witness, buf, cap);
}

abaf_engine abaf_result_engine(const abaf_result* r) {
    return r ? from_engine(r->report.engine) : ABAF_ENGINE_DEFAULT;
}

void abaf_result_stats(const abaf_result* r, abaf_stats* out) {
    if (!r || !out) return;
    const auto& rep = r->report;
    *out = {rep.n_args, rep.n_att, rep.n_sup, rep.t_inst_ms, rep.t_encode_ms, rep.t_solve_ms};
}

void abaf_result_free(abaf_result* r) { delete r; }

abaf_status abaf_instantiate(const abaf_framework* fw, const uint32_t* queries, size_t n_queries, abaf_core** out) {
    return guarded([&] {
        require(fw, "fw");
        require(out, "out");
        if (n_queries) require(queries, "queries");
        std::vector<abaf::Atom> qs;
        for (size_t i = 0; i < n_queries; ++i) qs.push_back(to_atom(fw->fw, queries[i]));
        *out = new abaf_core{abaf::build_core(fw->fw, qs)};
    });
}

size_t abaf_core_num_args(const abaf_core* core) { return core ? core->baf.size() : 0; }
size_t abaf_core_num_attacks(const abaf_core* core) { return core ? core->baf.attacks().size() : 0; }
size_t abaf_core_num_supports(const abaf_core* core) { return core ? core->baf.supports().size() : 0; }

abaf_status abaf_core_to_text(const abaf_core* core, char** out) {
    return guarded([&] {
        require(core, "core");
        require(out, "out");
        *out = dup_string(abaf::to_baf_text(core->baf));
    });
}

void abaf_core_free(abaf_core* core) { delete core; }

abaf_status abaf_oracle_extensions(const abaf_framework* fw, abaf_semantics sem, abaf_extensions** out) {
    return guarded([&] {
        require(fw, "fw");
        require(out, "out");
        *out = new abaf_extensions{abaf::oracle::aba_extensions(fw->fw, to_sem(sem))};
    });
}

size_t abaf_extensions_count(const abaf_extensions* ext) { return ext ? ext->sets.size() : 0; }

size_t abaf_extensions_get(const abaf_extensions* ext, size_t i, uint32_t* buf, size_t cap) {
    if (!ext || i >= ext->sets.size()) return 0;
    return copy_set(ext->sets[i], buf, cap);
}

void abaf_extensions_free(abaf_extensions* ext) { delete ext; }

void abaf_gen_params_init(abaf_gen_params* p, int set) {
    if (!p) return;
    abaf::GenParams2 d2;
    abaf::GenParams1 d1;
    *p = set == 2 ? abaf_gen_params{2, d2.n_atoms, d2.asm_ratio, d2.head_ratio, d2.max_rules_per_atom,
                                    d2.max_rule_size, d2.slack, d2.seed}
                  : abaf_gen_params{1, d1.n_atoms, d1.asm_ratio, d1.head_ratio, d1.max_rules_per_atom,
                                    d1.max_rule_size, 0, d1.seed};
}

abaf_status abaf_generate(const abaf_gen_params* p, abaf_framework** out) {
    return guarded([&] {
        require(p, "params");
        require(out, "out");
        check_set(p->set);
        *out = new abaf_framework{p->set == 1 ? abaf::gen_set1(params1(*p)) : abaf::gen_set2(params2(*p))};
    });
}

abaf_status abaf_instance_name(const abaf_gen_params* p, char** out) {
    return guarded([&] {
        require(p, "params");
        require(out, "out");
        check_set(p->set);
        *out = dup_string(p->set == 1 ? abaf::instance_name(params1(*p)) : abaf::instance_name(params2(*p)));
    });
}

const char* abaf_manifest_header(void) {
    static const std::string header = abaf::manifest_header();
    return header.c_str();
}

abaf_status abaf_manifest_row(const abaf_gen_params* p, char** out) {
    return guarded([&] {
        require(p, "params");
        require(out, "out");
        check_set(p->set);
        auto entry = p->set == 1 ? abaf::manifest_entry(params1(*p)) : abaf::manifest_entry(params2(*p));
        *out = dup_string(abaf::manifest_row(entry));
    });
}

abaf_status abaf_grid(int set, const size_t* n_atoms, size_t n_sizes, size_t per_cell, uint64_t base_seed,
                      abaf_gen_params** out, size_t* count) {
    return guarded([&] {
        require(out, "out");
        require(count, "count");
        if (n_sizes) require(n_atoms, "n_atoms");
        check_set(set);
        std::vector<std::size_t> sizes(n_atoms, n_atoms + n_sizes);
        std::vector<abaf_gen_params> grid;
        if (set == 1) {
            for (const auto& g : abaf::grid_set1(sizes, per_cell, base_seed))
                grid.push_back({1, g.n_atoms, g.asm_ratio, g.head_ratio, g.max_rules_per_atom, g.max_rule_size, 0,
                                g.seed});
        } else {
            for (const auto& g : abaf::grid_set2(sizes, per_cell, base_seed))
                grid.push_back({2, g.n_atoms, g.asm_ratio, g.head_ratio, g.max_rules_per_atom, g.max_rule_size,
                                g.slack, g.seed});
        }
        auto* arr = static_cast<abaf_gen_params*>(std::malloc(sizeof(abaf_gen_params) * (grid.empty() ? 1 : grid.size())));
        if (!arr) throw std::bad_alloc();
        std::copy(grid.begin(), grid.end(), arr);
        *out = arr;
        *count = grid.size();
    });
}

void abaf_grid_free(abaf_gen_params* grid) { std::free(grid); }

}  // extern "C"
