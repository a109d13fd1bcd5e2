#include "pbwkit/report.hpp"

#include "pbwkit/error.hpp"

#include <chrono>
#include <sstream>

namespace pbwkit {

using nlohmann::json;

Command parse_command(const std::string& name) {
    if (name == "check") return Command::Check;
    if (name == "jacobi") return Command::Jacobi;
    if (name == "complexity") return Command::Complexity;
    if (name == "tor") return Command::Tor;
    if (name == "hilbert") return Command::Hilbert;
    if (name == "rees") return Command::Rees;
    throw Error(ErrorCode::ValidationError, "unknown command '" + name + "'");
}

const char* command_name(Command c) {
    switch (c) {
    case Command::Check: return "check";
    case Command::Jacobi: return "jacobi";
    case Command::Complexity: return "complexity";
    case Command::Tor: return "tor";
    case Command::Hilbert: return "hilbert";
    case Command::Rees: return "rees";
    }
    return "";
}

namespace {

json blank(Command cmd) {
    return json{{"command", command_name(cmd)},
                {"verdict", nullptr},
                {"c", nullptr},
                {"certified", nullptr},
                {"jacobi", nullptr},
                {"dims", json::object()},
                {"witness", nullptr},
                {"timings", json::object()},
                {"notes", json::array()}};
}

json steps_json(const std::vector<JacobiStep>& steps) {
    json out = json::array();
    for (const auto& s : steps) out.push_back({{"k", s.k}, {"holds", s.holds}});
    return out;
}

json ladder_json(const std::vector<JacobiStep>& steps, int upto) {
    json j{{"upto", upto}, {"steps", steps_json(steps)}, {"first_failure", nullptr}};
    for (const auto& s : steps)
        if (!s.holds) {
            j["first_failure"] = s.k;
            break;
        }
    return j;
}

json witness_json(const Element& e, int k, const std::string& source, const Presentation& p) {
    json w{{"element", element_to_string(e, p.generators)}, {"degree", e.degree()}, {"source", source}};
    w["k"] = k >= 0 ? json(k) : json(nullptr);
    return w;
}

json rees_json(const ReesCheck& r) {
    json j{{"holds", r.holds}};
    j["first_failure"] = r.first_failure >= 0 ? json(r.first_failure) : json(nullptr);
    return j;
}

std::string verdict_text(const PbwReport& r) {
    if (r.verdict == Verdict::PbwUpToDegree) return "PBW_UP_TO_DEGREE(" + std::to_string(r.upto) + ")";
    return verdict_name(r.verdict);
}

class Timer {
public:
    explicit Timer(json& sink) : sink_(sink) {}
    void lap(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        sink_[name] = std::chrono::duration<double>(now - last_).count();
        last_ = now;
    }

private:
    json& sink_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

struct Prepared {
    std::vector<Element> P;
    GradedSubspace rp;
    FilteredMap alpha;
    bool lift_minimal = true;
};

Prepared prepare(const Presentation& p, json& notes) {
    validate_presentation(p);
    LiftResult lift = lift_presentation(p);
    if (!lift.minimal) notes.push_back("LIFT_NOT_MINIMAL: ambient relations meet T^1 I + I T^1");
    FilteredSubspace span = FilteredSubspace::span(p.g(), lift.free_deformation);
    return {lift.free_deformation, rp_of(span), extract_alpha(span), lift.minimal};
}

int bound_of(const Presentation& p, const PbwOptions& opts) { return opts.upto >= 0 ? opts.upto : p.max_degree; }

} // namespace

json check_json(const PbwReport& r, const Presentation& p) {
    json j = blank(Command::Check);
    j["verdict"] = verdict_text(r);
    j["c"] = r.complexity.c;
    j["certified"] = r.complexity.certified;
    j["jacobi"] = ladder_json(r.ladder.steps(), r.upto);
    j["jacobi"]["minimal_steps"] = steps_json(r.minimal_ladder);
    json& d = j["dims"];
    d["hilbert"] = r.hilbert;
    d["gr"] = r.gr_dims;
    d["gr_exact"] = r.verdict == Verdict::PbwCertified;
    d["D"] = r.d_dims;
    d["ann"] = r.ann_dims;
    d["tor3"] = r.complexity.table.tor3;
    d["rees"] = rees_json(r.rees);
    if (r.witness) j["witness"] = witness_json(*r.witness, r.witness_k, r.witness_source, p);
    for (const auto& [k, v] : r.timings) j["timings"][k] = v;
    j["notes"].push_back(std::string("certificate: ") + certificate_name(r.complexity.certificate));
    for (const auto& n : r.notes) j["notes"].push_back(n);
    return j;
}

json run_command(Command cmd, const Presentation& p, const PbwOptions& opts) {
    if (cmd == Command::Check) return check_json(pbw_check(p, opts), p);

    json j = blank(cmd);
    Timer clock(j["timings"]);
    Prepared prep = prepare(p, j["notes"]);
    clock.lap("prepare");
    const std::size_t g = p.g();
    const int N = bound_of(p, opts);

    switch (cmd) {
    case Command::Jacobi: {
        JacobiLadder ladder(g, prep.P, N);
        clock.lap("jacobi");
        j["jacobi"] = ladder_json(ladder.steps(), N);
        j["dims"]["gr"] = gr_dimensions(ladder, N);
        j["dims"]["gr_exact"] = false;
        if (auto f = ladder.first_failure()) j["witness"] = witness_json(*ladder.step(*f).witness, *f, "jacobi", p);
        break;
    }
    case Command::Complexity: {
        LinearReduction red = eliminate_degree_one(g, prep.rp);
        if (red.generators < g)
            j["notes"].push_back("c(A) computed after eliminating " + std::to_string(g - red.generators) + " generators in R_P^1");
        PresentedRing a(red.generators, p.field, minimize_relations(red.relations));
        ComplexityOptions copts = opts.complexity;
        if (p.tor_bound) copts.bound = *p.tor_bound;
        Complexity c = complexity(a, copts);
        clock.lap("complexity");
        j["c"] = c.c;
        j["certified"] = c.certified;
        j["dims"]["hilbert"] = c.hilbert.h;
        j["dims"]["tor3"] = c.table.tor3;
        j["notes"].push_back(std::string("certificate: ") + certificate_name(c.certificate));
        break;
    }
    case Command::Tor: {
        PresentedRing a(g, p.field, minimize_relations(prep.rp));
        Tor3Table t = tor3_resolution(a, N);
        clock.lap("tor");
        j["dims"]["tor3"] = t.tor3;
        j["dims"]["kernel"] = t.kernel;
        j["dims"]["source"] = t.source;
        break;
    }
    case Command::Hilbert: {
        PresentedRing a(g, p.field, prep.rp);
        j["dims"]["hilbert"] = a.hilbert_upto(N);
        clock.lap("hilbert");
        break;
    }
    case Command::Rees: {
        PresentedRing a(g, p.field, prep.rp);
        CentralExtension ext(g, prep.alpha, prep.rp);
        ReesCheck r = rees_identity(ext, a, N);
        std::vector<std::size_t> ann;
        for (int n = 0; n <= N; ++n) ann.push_back(ext.annihilator_dim(n));
        clock.lap("rees");
        j["dims"]["hilbert"] = r.a;
        j["dims"]["D"] = r.d;
        j["dims"]["ann"] = ann;
        j["dims"]["rees"] = rees_json(r);
        break;
    }
    case Command::Check: break;
    }
    return j;
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string row(const json& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + scalar_text(x);
    return s;
}

} // namespace

std::string render_text(const json& r) {
    std::ostringstream out;
    out << "command: " << scalar_text(r["command"]) << "\n";
    if (!r["verdict"].is_null()) out << "verdict: " << scalar_text(r["verdict"]) << "\n";
    if (!r["c"].is_null())
        out << "c(A): " << scalar_text(r["c"]) << (r["certified"].get<bool>() ? " (certified)" : " (not certified)") << "\n";
    if (!r["jacobi"].is_null()) {
        const json& jac = r["jacobi"];
        out << "jacobi up to k = " << scalar_text(jac["upto"]) << ":";
        for (const auto& s : jac["steps"]) out << " J" << s["k"].dump() << (s["holds"].get<bool>() ? "+" : "-");
        out << " (first failure " << scalar_text(jac["first_failure"]) << ")\n";
        if (jac.contains("minimal_steps") && !jac["minimal_steps"].empty()) {
            out << "jacobi on minimal relations:";
            for (const auto& s : jac["minimal_steps"]) out << " J" << s["k"].dump() << (s["holds"].get<bool>() ? "+" : "-");
            out << "\n";
        }
    }
    if (!r["witness"].is_null()) {
        const json& w = r["witness"];
        out << "witness (" << scalar_text(w["source"]) << ", k = " << scalar_text(w["k"]) << ", degree "
            << scalar_text(w["degree"]) << "): " << scalar_text(w["element"]) << "\n";
    }
    for (const auto& [key, v] : r["dims"].items()) {
        if (v.is_array())
            out << "dims " << key << ": " << row(v) << "\n";
        else if (v.is_object())
            out << "dims " << key << ": holds " << v["holds"].dump() << ", first failure " << scalar_text(v["first_failure"]) << "\n";
        else
            out << "dims " << key << ": " << scalar_text(v) << "\n";
    }
    for (const auto& n : r["notes"]) out << "note: " << n.get<std::string>() << "\n";
    out << "timings:";
    for (const auto& [key, v] : r["timings"].items()) out << " " << key << "=" << v.dump();
    out << "\n";
    return out.str();
}

int report_exit_code(const json& r) {
    if (!r["verdict"].is_string()) return 0;
    const std::string v = r["verdict"].get<std::string>();
    if (v == "PBW_CERTIFIED") return 0;
    if (v == "NOT_PBW") return 1;
    return 2;
}

} // namespace pbwkit
