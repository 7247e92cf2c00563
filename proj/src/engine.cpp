#include "engine.hpp"

#include <chrono>

#include "baf_sat.hpp"
#include "direct.hpp"
#include "errors.hpp"
#include "instantiate.hpp"
#include "oracle.hpp"

namespace abaf {
namespace {

class Stopwatch {
public:
    double lap_ms() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void run_baf(const Framework& fw, Semantics sem, Atom query, const SolveOptions& opt, RunReport& rep) {
    Stopwatch sw;
    const CoreBaf core = build_core(fw, {query});
    rep.n_args = core.size();
    rep.n_att = core.attacks().size();
    rep.n_sup = core.supports().size();
    rep.t_inst_ms = sw.lap_ms();

    if (sem == Semantics::Grd) {
        if (opt.dump) *opt.dump = encode_semantics(core, Semantics::Com).cnf;
        rep.t_encode_ms = sw.lap_ms();
        AssumptionSet g = grounded_assumptions(core);
        rep.accepted = fw.deduce(g).test(query);
        if (rep.accepted) rep.witness = std::move(g);
        rep.t_solve_ms = sw.lap_ms();
        return;
    }

    BafEncoding enc = encode_semantics(core, sem);
    enc.cnf.add(encode_credulous_clause(core, enc.vars, query));
    if (opt.dump) *opt.dump = enc.cnf;
    rep.t_encode_ms = sw.lap_ms();
    BafAnswer ans = solve_encoding(core, enc);
    rep.accepted = ans.accepted;
    rep.witness = std::move(ans.witness);
    rep.t_solve_ms = sw.lap_ms();
}

void run_direct(const Framework& fw, Semantics sem, Atom query, const SolveOptions& opt, RunReport& rep) {
    Stopwatch sw;
    DirectOptions dopt;
    dopt.prune = opt.prune;
    DirectAnswer ans;
    switch (sem) {
        case Semantics::Adm: ans = cegar_adm_credulous(fw, query, dopt); break;
        case Semantics::Com:
        case Semantics::Prf: ans = cegar_com_credulous(fw, query, dopt); break;
        case Semantics::Stb: ans = stable_credulous(fw, query, dopt); break;
        case Semantics::Grd: throw UsageError("the direct engine does not support grounded semantics");
    }
    rep.accepted = ans.accepted;
    rep.witness = std::move(ans.witness);
    rep.t_solve_ms = sw.lap_ms();
}

void run_oracle(const Framework& fw, Semantics sem, Atom query, RunReport& rep) {
    Stopwatch sw;
    rep.witness = oracle::aba_credulous_witness(fw, sem, query);
    rep.accepted = rep.witness.has_value();
    rep.t_solve_ms = sw.lap_ms();
}

}  // namespace

std::string_view to_string(Engine e) {
    switch (e) {
        case Engine::Baf: return "baf";
        case Engine::Direct: return "direct";
        case Engine::Oracle: return "oracle";
    }
    return "?";
}

std::optional<Engine> parse_engine(std::string_view s) {
    for (Engine e : {Engine::Baf, Engine::Direct, Engine::Oracle})
        if (to_string(e) == s) return e;
    return std::nullopt;
}

Engine default_engine(Semantics sem) { return sem == Semantics::Stb ? Engine::Direct : Engine::Baf; }

RunReport solve_query(const Framework& fw, Semantics sem, Atom query, const SolveOptions& opt) {
    if (query >= fw.declared_atoms()) throw UsageError("unknown atom " + std::to_string(query + 1));
    RunReport rep;
    rep.engine = opt.engine.value_or(default_engine(sem));
    switch (rep.engine) {
        case Engine::Baf: run_baf(fw, sem, query, opt, rep); break;
        case Engine::Direct: run_direct(fw, sem, query, opt, rep); break;
        case Engine::Oracle: run_oracle(fw, sem, query, rep); break;
    }
    return rep;
}

}  // namespace abaf
