#include "pbwkit/pbw_check.hpp"

#include "pbwkit/error.hpp"

#include <chrono>

namespace pbwkit {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::PbwCertified: return "PBW_CERTIFIED";
    case Verdict::NotPbw: return "NOT_PBW";
    case Verdict::PbwUpToDegree: return "PBW_UP_TO_DEGREE";
    }
    return "";
}

namespace {

class Stopwatch {
public:
    explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
    void lap(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        sink_.emplace_back(name, std::chrono::duration<double>(now - last_).count());
        last_ = now;
    }

private:
    std::vector<std::pair<std::string, double>>& sink_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

} // namespace

PbwReport pbw_check(const Presentation& p, const PbwOptions& opts) {
    validate_presentation(p);
    PbwReport rep;
    Stopwatch clock(rep.timings);
    const std::size_t g = p.g();
    const int N = opts.upto >= 0 ? opts.upto : p.max_degree;
    rep.upto = N;

    LiftResult lift = lift_presentation(p);
    rep.lifted = !p.ambient_relations.empty();
    rep.lift_minimal = lift.minimal;
    rep.lift_obstruction = lift.obstruction;
    rep.free_deformation = lift.free_deformation;
    if (!lift.minimal) rep.notes.push_back("LIFT_NOT_MINIMAL: ambient relations meet T^1 I + I T^1; no certificate");
    clock.lap("lift");

    const std::vector<Element>& P = rep.free_deformation;
    FilteredSubspace span = FilteredSubspace::span(g, P);
    GradedSubspace rp = rp_of(span);
    FilteredMap alpha = extract_alpha(span);
    rep.relations_dim = rp.total_dim();
    rep.degree_one_relations = rp.dim(1) > 0;
    if (rep.degree_one_relations) rep.notes.push_back("R_P has degree one elements; no certificate");

    GradedSubspace rmin = minimize_relations(rp);
    rep.minimal_relations_dim = rmin.total_dim();
    FilteredSubspace pmin = apply_alpha(alpha, rmin);
    PresentedRing a_rp(g, p.field, rp);
    PresentedRing a(g, p.field, rmin);
    const int gen_top = std::max(N, rp.max_degree());
    for (int n = 0; n <= gen_top; ++n)
        if (a.ideal_dim(n) != a_rp.ideal_dim(n))
            throw Error(ErrorCode::DomainMismatch, "minimized relations generate a different ideal in degree " + std::to_string(n));
    clock.lap("relations");

    const bool certifiable = lift.minimal && !rep.degree_one_relations;
    ComplexityOptions copts = opts.complexity;
    if (p.tor_bound) copts.bound = *p.tor_bound;
    if (!rep.degree_one_relations) {
        rep.complexity = complexity(a, copts);
    } else {
        LinearReduction red = eliminate_degree_one(g, rp);
        PresentedRing reduced(red.generators, p.field, minimize_relations(red.relations));
        rep.complexity = complexity(reduced, copts);
        rep.notes.push_back("c(A) computed after eliminating " + std::to_string(g - red.generators) + " generators in R_P^1");
    }
    clock.lap("complexity");

    rep.ladder = JacobiLadder(g, P, N);
    clock.lap("jacobi");

    const int c = rep.complexity.c;
    const int d = span.degree();
    const bool c_known = certifiable && rep.complexity.certified;
    const int min_top = std::max({c_known ? c : std::min(std::max(c, 0), N), d - 1, 0});
    JacobiLadder minimal(g, pmin.basis(), min_top);
    for (const auto& s : minimal.steps())
        if (s.k <= std::max(c, 0)) rep.minimal_ladder.push_back(s);
    // P ⊆ P'_d, with P'_d the level d of the ladder of P'
    {
        JacobiLadder upto_d(g, pmin.basis(), std::max(d - 1, 0));
        const FilteredSubspace& pd = upto_d.top_level();
        for (const auto& e : span.basis()) {
            if (pd.contains(e)) continue;
            SparseVec rem = pd.echelon().reduce(pd.index().vector(e));
            rep.generation_gap = pd.index().element(rem);
            break;
        }
    }
    clock.lap("minimal_presentation");

    auto p_fail = rep.ladder.first_failure(0);
    std::optional<int> min_fail;
    for (const auto& s : rep.minimal_ladder)
        if (!s.holds) {
            min_fail = s.k;
            break;
        }
    if (p_fail) {
        rep.verdict = Verdict::NotPbw;
        rep.witness = rep.ladder.step(*p_fail).witness;
        rep.witness_k = *p_fail;
        rep.witness_source = "jacobi";
    } else if (min_fail) {
        rep.verdict = Verdict::NotPbw;
        rep.witness = rep.minimal_ladder[std::size_t(*min_fail)].witness;
        rep.witness_k = *min_fail;
        rep.witness_source = "jacobi_minimal";
    } else if (c_known) {
        if (rep.generation_gap) {
            rep.verdict = Verdict::NotPbw;
            rep.witness = rep.generation_gap;
            rep.witness_source = "generation";
        } else {
            rep.verdict = Verdict::PbwCertified;
        }
    } else {
        rep.verdict = Verdict::PbwUpToDegree;
        if (!rep.complexity.certified && certifiable)
            rep.notes.push_back("c(A) is not certified for an infinite-dimensional A without a quadratic PBW basis");
    }

    rep.hilbert = a_rp.hilbert_upto(N);
    rep.gr_dims = gr_dimensions(rep.ladder, N);
    clock.lap("dimensions");

    CentralExtension ext(g, alpha, rp);
    for (int n = 0; n <= N; ++n) {
        rep.d_dims.push_back(ext.dim(n));
        rep.ann_dims.push_back(ext.annihilator_dim(n));
    }
    rep.rees = rees_identity(ext, a_rp, N);
    for (int n = 0; n <= N; ++n)
        if ((rep.ann_dims[std::size_t(n)] == 0) != rep.ladder.step(n).holds)
            throw Error(ErrorCode::DomainMismatch, "Jacobi condition and annihilator disagree in degree " + std::to_string(n));
    clock.lap("central_extension");
    return rep;
}

} // namespace pbwkit
