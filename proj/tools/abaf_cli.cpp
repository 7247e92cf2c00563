// Command-line front end. Talks to the library only through abaf/abaf.h.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abaf/abaf.h"

namespace {

/// Carries a library status out of a subcommand.
struct Failure {
    abaf_status status;
    std::string message;
};

void check(abaf_status s) {
    if (s != ABAF_OK) throw Failure{s, abaf_last_error()};
}

void usage_error(const std::string& msg) { throw Failure{ABAF_ERR_USAGE, msg}; }

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using FrameworkPtr = std::unique_ptr<abaf_framework, Deleter<abaf_framework, abaf_framework_free>>;
using ResultPtr = std::unique_ptr<abaf_result, Deleter<abaf_result, abaf_result_free>>;
using CorePtr = std::unique_ptr<abaf_core, Deleter<abaf_core, abaf_core_free>>;
using ExtensionsPtr = std::unique_ptr<abaf_extensions, Deleter<abaf_extensions, abaf_extensions_free>>;

std::string take_string(char* s) {
    std::string out(s);
    abaf_string_free(s);
    return out;
}

FrameworkPtr load(const std::string& path) {
    abaf_framework* fw = nullptr;
    check(abaf_framework_load(path.c_str(), &fw));
    return FrameworkPtr(fw);
}

abaf_semantics semantics(const std::string& name) {
    abaf_semantics sem{};
    check(abaf_parse_semantics(name.c_str(), &sem));
    return sem;
}

uint32_t query_or_default(const abaf_framework* fw, std::optional<uint32_t> q) {
    if (q) return *q;
    uint32_t d = 0;
    if (abaf_framework_default_query(fw, &d)) return d;
    usage_error("no query given (-q) and the instance names none");
    return 0;
}

void write_set(std::ostream& out, const std::vector<uint32_t>& atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i) out << (i ? " " : "") << atoms[i];
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) usage_error("cannot write " + path);
}

// ---- solve ----

struct SolveArgs {
    std::string file;
    std::string sem;
    std::optional<uint32_t> query;
    std::string engine;
    std::string csv;
    std::string dump_cnf;
    bool no_prune = false;
};

std::vector<uint32_t> witness(const abaf_result* r) {
    std::vector<uint32_t> w;
    if (!abaf_result_accepted(r) || !abaf_result_has_witness(r)) return w;
    w.resize(abaf_result_witness(r, nullptr, 0));
    abaf_result_witness(r, w.data(), w.size());
    return w;
}

void append_csv(const SolveArgs& a, abaf_semantics sem, uint32_t query, const abaf_result* r, double t_parse) {
    const bool fresh = !std::filesystem::exists(a.csv) || std::filesystem::file_size(a.csv) == 0;
    std::ofstream f(a.csv, std::ios::app);
    if (!f) usage_error("cannot write " + a.csv);
    if (fresh) f << "instance,semantics,query,engine,answer,witness,n_args,n_att,n_sup,t_parse_ms,t_inst_ms,t_encode_ms,t_solve_ms\n";
    abaf_stats st{};
    abaf_result_stats(r, &st);
    f << a.file << ',' << abaf_semantics_name(sem) << ',' << query << ',' << abaf_engine_name(abaf_result_engine(r))
      << ',' << (abaf_result_accepted(r) ? "YES" : "NO") << ',';
    write_set(f, witness(r));
    f << ',' << st.n_args << ',' << st.n_att << ',' << st.n_sup
      << ',' << t_parse << ',' << st.t_inst_ms << ',' << st.t_encode_ms << ',' << st.t_solve_ms << '\n';
}

void run_solve(const SolveArgs& a) {
    const abaf_semantics sem = semantics(a.sem);
    abaf_solve_options opt;
    abaf_solve_options_init(&opt);
    if (!a.engine.empty()) check(abaf_parse_engine(a.engine.c_str(), &opt.engine));
    opt.prune = a.no_prune ? 0 : 1;
    if (!a.dump_cnf.empty()) opt.dump_cnf_path = a.dump_cnf.c_str();

    auto t0 = std::chrono::steady_clock::now();
    FrameworkPtr fw = load(a.file);
    double t_parse = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    const uint32_t q = query_or_default(fw.get(), a.query);
    abaf_result* raw = nullptr;
    check(abaf_solve(fw.get(), sem, q, &opt, &raw));
    ResultPtr r(raw);

    std::cout << (abaf_result_accepted(r.get()) ? "YES" : "NO") << '\n';
    if (abaf_result_accepted(r.get()) && abaf_result_has_witness(r.get())) {
        std::cout << 'w';
        for (uint32_t x : witness(r.get())) std::cout << ' ' << x;
        std::cout << '\n';
    }
    if (!a.csv.empty()) append_csv(a, sem, q, r.get(), t_parse);
}

// ---- instantiate ----

struct InstantiateArgs {
    std::string file;
    std::vector<uint32_t> queries;
    std::string out;
};

void run_instantiate(const InstantiateArgs& a) {
    FrameworkPtr fw = load(a.file);
    abaf_core* raw = nullptr;
    check(abaf_instantiate(fw.get(), a.queries.data(), a.queries.size(), &raw));
    CorePtr core(raw);
    char* text = nullptr;
    check(abaf_core_to_text(core.get(), &text));
    std::string baf = take_string(text);
    if (a.out.empty()) {
        std::cout << baf;
        return;
    }
    write_file(a.out, baf);
    std::cout << "args " << abaf_core_num_args(core.get()) << " attacks " << abaf_core_num_attacks(core.get())
              << " supports " << abaf_core_num_supports(core.get()) << '\n';
}

// ---- generate ----

struct GenerateArgs {
    abaf_gen_params p{};
    std::string out;
    bool grid = false;
    std::string out_dir = ".";
    std::vector<std::size_t> sizes{80, 120, 160, 200};
    std::size_t per_cell = 5;
};

std::string serialize(const abaf_framework* fw) {
    char* text = nullptr;
    check(abaf_framework_serialize(fw, &text));
    return take_string(text);
}

void run_generate(GenerateArgs a) {
    if (!a.grid) {
        abaf_framework* raw = nullptr;
        check(abaf_generate(&a.p, &raw));
        FrameworkPtr fw(raw);
        std::string text = serialize(fw.get());
        if (a.out.empty())
            std::cout << text;
        else
            write_file(a.out, text);
        return;
    }

    abaf_gen_params* grid = nullptr;
    std::size_t count = 0;
    check(abaf_grid(a.p.set, a.sizes.data(), a.sizes.size(), a.per_cell, a.p.seed, &grid, &count));
    std::unique_ptr<abaf_gen_params, Deleter<abaf_gen_params, abaf_grid_free>> hold(grid);
    std::filesystem::path dir(a.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) usage_error("cannot create " + a.out_dir);

    std::string manifest = std::string(abaf_manifest_header()) + '\n';
    for (std::size_t i = 0; i < count; ++i) {
        abaf_framework* raw = nullptr;
        check(abaf_generate(&grid[i], &raw));
        FrameworkPtr fw(raw);
        char* name = nullptr;
        check(abaf_instance_name(&grid[i], &name));
        write_file((dir / take_string(name)).string(), serialize(fw.get()));
        char* row = nullptr;
        check(abaf_manifest_row(&grid[i], &row));
        manifest += take_string(row) + '\n';
    }
    write_file((dir / "manifest.csv").string(), manifest);
    std::cout << count << " instances written to " << dir.string() << '\n';
}

// ---- classify / oracle ----

void run_classify(const std::string& file) {
    FrameworkPtr fw = load(file);
    int flat = 0, atomic = 0, additive = 0;
    check(abaf_framework_classify(fw.get(), &flat, &atomic, &additive));
    auto b = [](int v) { return v ? "true" : "false"; };
    std::cout << "flat=" << b(flat) << " atomic=" << b(atomic) << " additive=" << b(additive) << '\n';
}

struct OracleArgs {
    std::string file;
    std::string sem;
    std::optional<uint32_t> query;
    bool enumerate = false;
};

void run_oracle(const OracleArgs& a) {
    const abaf_semantics sem = semantics(a.sem);
    FrameworkPtr fw = load(a.file);
    if (a.query && !a.enumerate) {
        abaf_solve_options opt;
        abaf_solve_options_init(&opt);
        opt.engine = ABAF_ENGINE_ORACLE;
        abaf_result* raw = nullptr;
        check(abaf_solve(fw.get(), sem, *a.query, &opt, &raw));
        ResultPtr r(raw);
        std::cout << (abaf_result_accepted(r.get()) ? "YES" : "NO") << '\n';
        return;
    }
    abaf_extensions* raw = nullptr;
    check(abaf_oracle_extensions(fw.get(), sem, &raw));
    ExtensionsPtr ext(raw);
    for (std::size_t i = 0; i < abaf_extensions_count(ext.get()); ++i) {
        std::vector<uint32_t> e(abaf_extensions_get(ext.get(), i, nullptr, 0));
        abaf_extensions_get(ext.get(), i, e.data(), e.size());
        write_set(std::cout, e);
        std::cout << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Credulous reasoning for assumption-based argumentation"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Decide credulous acceptance of an atom");
    s->add_option("-f,--file", solve.file, "ICCMA ABA instance")->required();
    s->add_option("-s,--semantics", solve.sem, "adm|com|prf|stb|grd")->required();
    s->add_option("-q,--query", solve.query, "Query atom (defaults to the instance's '# query' line)");
    s->add_option("--engine", solve.engine, "baf|direct|oracle");
    s->add_option("--csv", solve.csv, "Append a timing row to this CSV file");
    s->add_option("--dump-cnf", solve.dump_cnf, "Write the solved CNF (baf engine)");
    s->add_flag("--no-prune", solve.no_prune, "Disable candidate pruning in the direct engine");

    InstantiateArgs inst;
    auto* i = app.add_subcommand("instantiate", "Build the argument core and print it");
    i->add_option("-f,--file", inst.file, "ICCMA ABA instance")->required();
    i->add_option("-q,--query", inst.queries, "Extra conclusions to keep");
    i->add_option("-o,--out", inst.out, "Write the BAF here instead of stdout");

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Generate benchmark instances");
    std::string set_name;
    g->add_option("set", set_name, "set1|set2")->required()->check(CLI::IsMember({"set1", "set2"}));
    abaf_gen_params_init(&gen.p, 1);
    abaf_gen_params d2;
    abaf_gen_params_init(&d2, 2);
    std::optional<std::size_t> mr, ms;
    g->add_option("-n,--n-atoms", gen.p.n_atoms, "Number of atoms")->capture_default_str();
    g->add_option("--asm-ratio", gen.p.asm_ratio, "Fraction of atoms that are assumptions")->capture_default_str();
    g->add_option("--head-ratio", gen.p.head_ratio, "Fraction of assumptions allowed as rule heads")
        ->capture_default_str();
    g->add_option("--mr", mr, "Max rules per derivable atom");
    g->add_option("--ms", ms, "Max rule body size");
    g->add_option("--slack", gen.p.slack, "Non-assumption atoms allowed per body (set2)")->capture_default_str();
    g->add_option("--seed", gen.p.seed, "Seed (base seed with --grid)")->capture_default_str();
    g->add_option("-o,--out", gen.out, "Output file (single instance)");
    g->add_flag("--grid", gen.grid, "Generate the full parameter grid with a manifest");
    g->add_option("--out-dir", gen.out_dir, "Directory for --grid")->capture_default_str();
    g->add_option("--sizes", gen.sizes, "Atom counts for --grid")->delimiter(',');
    g->add_option("--per-cell", gen.per_cell, "Instances per grid cell")->capture_default_str();

    std::string classify_file;
    auto* c = app.add_subcommand("classify", "Report fragment membership");
    c->add_option("-f,--file", classify_file, "ICCMA ABA instance")->required();

    OracleArgs orc;
    auto* o = app.add_subcommand("oracle", "Brute-force reference semantics");
    o->add_option("-f,--file", orc.file, "ICCMA ABA instance")->required();
    o->add_option("-s,--semantics", orc.sem, "adm|com|prf|stb|grd")->required();
    o->add_option("-q,--query", orc.query, "Answer a credulous query instead of listing extensions");
    o->add_flag("--enumerate", orc.enumerate, "List all extensions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*s) {
            run_solve(solve);
        } else if (*i) {
            run_instantiate(inst);
        } else if (*g) {
            if (set_name == "set2") {
                gen.p.set = 2;
                gen.p.max_rules_per_atom = d2.max_rules_per_atom;
                gen.p.max_rule_size = d2.max_rule_size;
            }
            if (mr) gen.p.max_rules_per_atom = *mr;
            if (ms) gen.p.max_rule_size = *ms;
            run_generate(gen);
        } else if (*c) {
            run_classify(classify_file);
        } else if (*o) {
            run_oracle(orc);
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return static_cast<int>(f.status);
    }
    return 0;
}
