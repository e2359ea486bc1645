#include "thickset/cli.hpp"

#include "thickset/nilpower.hpp"
#include "thickset/presburger.hpp"
#include "thickset/rotation.hpp"
#include "thickset/setcalc.hpp"
#include "thickset/vdw.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace thickset::cli {

namespace pb = thickset::presburger;
namespace rot = thickset::rotation;
namespace np = thickset::nilpower;

using nlohmann::json;

namespace {

std::string istr(const Int& v) { return v.str(); }

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hash_hex(const std::string& s) {
    std::ostringstream os;
    os << std::hex << fnv1a64(s);
    return os.str();
}

unsigned parse_alpha(const std::string& text) {
    std::string digits;
    for (char c : text)
        if (c >= '0' && c <= '9') digits += c;
    if (digits.empty()) throw std::invalid_argument("alpha: expected e.g. sqrt2 or sqrt(3)");
    unsigned d = static_cast<unsigned>(std::stoul(digits));
    if (d < 2 || is_square(Int(d)))
        throw std::invalid_argument("alpha: radicand must be a nonsquare >= 2");
    return d;
}

json int_list(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(istr(x));
    return a;
}

std::vector<Int> int_list_back(const json& a) {
    std::vector<Int> v;
    for (const auto& s : a) v.emplace_back(s.get<std::string>());
    return v;
}

struct Outcome {
    int exit_code = 0;
    json report;
    std::string csv;  // nonempty for sweeps
};

// --- parse ------------------------------------------------------------------

Outcome cmd_parse(const std::string& set_text, const Config& cfg) {
    pb::PresburgerSet P = pb::parse(set_text);
    std::string normalized = pb::print(pb::normalize(P));
    json payload{{"input", set_text}, {"normalized", normalized}};
    return {0, make_report("parse", {{"set", set_text}}, "parsed", "parse", payload, cfg.seed)};
}

// --- thick ------------------------------------------------------------------

Outcome cmd_thick(const std::string& set_text, const Config& cfg) {
    pb::PresburgerSet P = pb::parse(set_text);
    pb::ThicknessVerdict v = pb::decide_thick(P, cfg.dfs_cap);
    json payload{{"thick", v.thick},
                 {"symmetric_input", v.symmetric_input},
                 {"symmetrized", pb::print(pb::symmetrize(P))},
                 {"minimal_lower_bound", v.minimal_lower_bound},
                 {"capped", v.capped},
                 {"T", istr(v.data.T)},
                 {"L", istr(v.data.L)}};
    if (v.minimal) payload["minimal"] = *v.minimal;
    payload["independent_witness"] = int_list(v.independent_witness);
    if (!v.thick) payload["witness_spacing"] = istr(v.witness_spacing);
    std::string verdict = v.thick ? "thick" : "not_thick";
    return {v.thick ? 0 : 1,
            make_report("thick", {{"set", set_text}}, verdict, "thickness", payload, cfg.seed)};
}

// --- generic ----------------------------------------------------------------

Outcome cmd_generic(const std::string& set_text, const Config& cfg) {
    pb::PresburgerSet P = pb::parse(set_text);
    pb::GenericVerdict v = pb::decide_generic(P);
    json payload{{"generic", v.generic},
                 {"symmetrized", pb::print(pb::symmetrize(P))},
                 {"m", v.m},
                 {"lower_bound", v.lower_bound},
                 {"exact", v.exact},
                 {"translates", int_list(v.translates)}};
    std::string verdict = v.generic ? "generic" : "not_generic";
    return {v.generic ? 0 : 1,
            make_report("generic", {{"set", set_text}}, verdict, "genericity", payload, cfg.seed)};
}

// --- rotation ---------------------------------------------------------------

json identity_payload(const char* kind, const rot::IdentityReport& r, const Config& cfg) {
    const char* status = r.status == rot::VerifyStatus::Verified     ? "verified"
                         : r.status == rot::VerifyStatus::Mismatch ? "mismatch"
                                                                     : "inconclusive";
    return json{{"kind", kind},          {"status", status},
                {"checked", r.checked},  {"mismatches", r.mismatches},
                {"inconclusive", r.inconclusive}, {"detail", r.detail},
                {"window", cfg.window},  {"witness_bound", cfg.witness_bound}};
}

Outcome identity_outcome(const std::string& cmd, json inputs, const char* kind,
                         const rot::IdentityReport& r, const Config& cfg) {
    int code = r.status == rot::VerifyStatus::Verified     ? 0
               : r.status == rot::VerifyStatus::Mismatch ? 1
                                                           : 2;
    const char* verdict = code == 0 ? "verified" : code == 1 ? "mismatch" : "unresolved";
    return {code, make_report(cmd, std::move(inputs), verdict, "identity",
                              identity_payload(kind, r, cfg), cfg.seed)};
}

json witness_table_payload(unsigned d, const Rat& t, const rot::WitnessTable& tab) {
    json entries = json::array();
    for (const auto& e : tab.entries) {
        json row{{"m", istr(e.m)}, {"kernel_member", e.kernel_member}};
        if (e.multiplier) row["k"] = istr(*e.multiplier);
        entries.push_back(row);
    }
    return json{{"d", d}, {"t", rational_str(t)}, {"entries", entries}, {"complete", tab.complete}};
}

// --- check-cert -------------------------------------------------------------

bool check_thickness(const json& p) {
    pb::PresburgerSet S = pb::parse(p.at("symmetrized").get<std::string>());
    if (p.at("thick").get<bool>()) {
        std::vector<Int> w = int_list_back(p.at("independent_witness"));
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (S.contains(w[j] - w[i]) || S.contains(w[i] - w[j])) return false;
        if (p.contains("minimal") && p.at("minimal").get<size_t>() != w.size() + 1) return false;
        return p.at("minimal_lower_bound").get<size_t>() == w.size() + 1;
    }
    Int s(p.at("witness_spacing").get<std::string>());
    if (s <= 0) return false;
    for (int k = 1; k <= 8; ++k)
        if (S.contains(s * k)) return false;
    return true;
}

bool check_genericity(const json& p) {
    pb::PresburgerSet S = pb::parse(p.at("symmetrized").get<std::string>());
    pb::EventualData data = pb::eventual_data(S);
    bool plus = false, minus = false;
    for (bool b : data.rplus) plus = plus || b;
    for (bool b : data.rminus) minus = minus || b;
    if (!p.at("generic").get<bool>()) return !(plus && minus);
    if (!(plus && minus)) return false;
    std::vector<Int> shifts = int_list_back(p.at("translates"));
    if (shifts.size() != p.at("m").get<size_t>()) return false;
    Int maxshift = 0;
    for (const Int& s : shifts) maxshift = std::max(maxshift, Int(abs(s)));
    Int W = data.T + data.L + maxshift;
    for (Int x = -W; x <= W; ++x) {
        bool covered = false;
        for (const Int& s : shifts)
            if (S.contains(x - s)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool check_membership(const json& p) {
    unsigned d = p.at("d").get<unsigned>();
    Rat t = parse_rational(p.at("t").get<std::string>());
    Int n(p.at("n").get<std::string>());
    Surd v = rot::rotation_position(d, n);
    if (v.str() != p.at("value").get<std::string>()) return false;
    return (v.abs().compare(t) < 0) == p.at("member").get<bool>();
}

bool check_bohr_thickness(const json& p) {
    unsigned d = p.at("d").get<unsigned>();
    Rat t = parse_rational(p.at("t").get<std::string>());
    std::vector<Int> w = int_list_back(p.at("witness"));
    if (w.size() + 1 != p.at("empirical_min").get<size_t>()) return false;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j) {
            Surd dist = rot::rotation_position(d, w[j] - w[i]).abs();
            if (dist.compare(t) < 0) return false;  // pair inside X(t): not independent
        }
    return true;
}

bool check_identity(const json& p) {
    bool verified = p.at("status").get<std::string>() == "verified";
    return verified == (p.at("mismatches").get<uint64_t>() == 0 &&
                        p.at("inconclusive").get<uint64_t>() == 0);
}

bool check_witness_table(const json& p) {
    unsigned d = p.at("d").get<unsigned>();
    Rat t = parse_rational(p.at("t").get<std::string>());
    rot::BohrSet X(rot::CircleHom::surd_rotation(d), t);
    bool complete = true;
    for (const auto& row : p.at("entries")) {
        Int m(row.at("m").get<std::string>());
        if (row.at("kernel_member").get<bool>()) {
            if (rot::rotation_position(d, m).sign() != 0) return false;
        } else if (row.contains("k")) {
            Int k(row.at("k").get<std::string>());
            if (X.member(k * m)) return false;
        } else {
            complete = false;
        }
    }
    return complete == p.at("complete").get<bool>();
}

bool check_arc_cover_payload(const json& p) {
    unsigned d = p.at("d").get<unsigned>();
    Rat t = parse_rational(p.at("t").get<std::string>());
    std::vector<Int> translates = int_list_back(p.at("translates"));
    vdw::ArcCoverCertificate cert;
    for (const auto& arc : p.at("arcs"))
        cert.arcs.emplace_back(Surd::parse(arc.at(0).get<std::string>()),
                               Surd::parse(arc.at(1).get<std::string>()));
    if (!vdw::check_arc_cover(cert)) return false;
    // The stored arcs must be exactly the translate arcs.
    std::vector<std::pair<Surd, Surd>> expect;
    for (const Int& a : translates) {
        Surd lo = vdw::position01(rot::rotation_position(d, a) - t);
        expect.emplace_back(lo, lo + 2 * t);
    }
    std::sort(expect.begin(), expect.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    if (expect.size() != cert.arcs.size()) return false;
    for (size_t i = 0; i < expect.size(); ++i)
        if (!(expect[i].first == cert.arcs[i].first) ||
            !(expect[i].second == cert.arcs[i].second))
            return false;
    return true;
}

bool check_power_cover(const json& p) {
    Rat s1 = parse_rational(p.at("s1").get<std::string>());
    Rat s2 = parse_rational(p.at("s2").get<std::string>());
    if (!(s1 > 0 && s2 > 0 && s1 <= Rat(1, 2) && s2 <= Rat(1, 2) && s1 + s2 > Rat(1, 2)))
        return false;
    return p.at("covers").get<bool>() ==
           (p.at("samples").get<uint64_t>() == p.at("decomposed").get<uint64_t>());
}

bool check_pigeonhole(const json& p) {
    unsigned N = p.at("modulus").get<unsigned>();
    unsigned K = p.at("K").get<unsigned>();
    if (!p.at("collision").get<bool>()) return true;  // honest no-collision report
    Int x(p.at("x").get<std::string>());
    std::vector<bool> P(N, false);
    P[0] = true;
    for (unsigned a = 1; a < N; ++a) {
        unsigned sq = static_cast<unsigned>((static_cast<uint64_t>(a) * a) % N);
        P[sq] = true;
        P[(N - sq) % N] = true;
    }
    for (unsigned k = 1; k <= K; ++k) {
        Int kx = mod_floor(Int(k) * x, N);
        bool found = false;
        for (unsigned a = 0; a < N && !found; ++a)
            if (P[a] && P[static_cast<size_t>(mod_floor(Int(a) - kx, N))]) found = true;
        if (!found) return false;
    }
    return true;
}

bool check_power_subgroup(const json& p) {
    Int n(p.at("n").get<std::string>());
    np::HeisSubgroup H;
    H.m11 = Int(p.at("m11").get<std::string>());
    H.m12 = Int(p.at("m12").get<std::string>());
    H.m22 = Int(p.at("m22").get<std::string>());
    H.center_mod = Int(p.at("center_mod").get<std::string>());
    H.coset_z[{Int(0), Int(0)}] = 0;
    if (istr(H.index()) != p.at("index").get<std::string>()) return false;
    // Generator powers must be members; for n > 1 the generators must not be.
    for (const HeisElem& g : {HeisElem{1, 0, 0}, HeisElem{0, 1, 0}, HeisElem{1, 1, 0}}) {
        if (!np::subgroup_membership(H, heis_pow(g, n))) return false;
        if (n > 1 && np::subgroup_membership(H, g)) return false;
    }
    return np::subgroup_membership(H, HeisElem{0, 0, H.center_mod});
}

bool check_malcev_root(const json& p) {
    Int n(p.at("n").get<std::string>());
    HeisElem e{Int(p.at("x").get<std::string>()), Int(p.at("y").get<std::string>()),
               Int(p.at("z").get<std::string>())};
    auto root = np::malcev_root(e, n);
    if (p.at("found").get<bool>()) {
        if (!root) return false;
        HeisElem r{Int(p.at("root_x").get<std::string>()), Int(p.at("root_y").get<std::string>()),
                   Int(p.at("root_z").get<std::string>())};
        return heis_pow(r, n) == e;
    }
    return !root;
}

bool check_containment(const json& p) {
    Int n(p.at("n").get<std::string>());
    if (p.at("holds").get<bool>()) return p.at("exceptions").empty();
    np::HeisSubgroup H = np::power_subgroup(n * n);
    for (const auto& ex : p.at("exceptions")) {
        HeisElem e{Int(ex.at(0).get<std::string>()), Int(ex.at(1).get<std::string>()),
                   Int(ex.at(2).get<std::string>())};
        if (!np::subgroup_membership(H, e)) return false;
        if (np::malcev_root(e, n)) return false;
    }
    return true;
}

bool check_density(const json& p) {
    if (!p.at("resolved").get<bool>()) return true;
    Rat eps = parse_rational(p.at("eps").get<std::string>());
    Surd v = Surd::parse(p.at("value").get<std::string>());
    return v.sign() != 0 && v.reduced_mod1().abs().compare(eps) < 0;
}

// --- sweeps -----------------------------------------------------------------

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

double surd_approx(const Surd& v) {
    return (static_cast<double>(v.p()) +
            static_cast<double>(v.q()) * std::sqrt(static_cast<double>(v.d()))) /
           static_cast<double>(v.r());
}

std::string sweep_bohr(unsigned d, const Rat& t, long long from, long long to) {
    std::ostringstream os;
    os << "n,position_exact,position_approx,member\n";
    rot::BohrSet X(rot::CircleHom::surd_rotation(d), t);
    for (long long n = from; n <= to; ++n) {
        Surd v = rot::rotation_position(d, Int(n));
        os << n << "," << csv_quote(v.str()) << "," << surd_approx(v) << ","
           << (X.member(Int(n)) ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string sweep_generation(const Int& n, int radius) {
    np::GenerationProfile prof = np::steps_to_generate(n, radius);
    std::ostringstream os;
    os << "factor_count,elements\n";
    for (size_t k = 0; k < prof.layer_counts.size(); ++k)
        if (prof.layer_counts[k] > 0 || k <= static_cast<size_t>(prof.max_steps))
            os << k << "," << prof.layer_counts[k] << "\n";
    if (prof.unresolved > 0) os << "unresolved," << prof.unresolved << "\n";
    return os.str();
}

std::string sweep_witness_table(unsigned d, const Rat& t, const Int& M, const Int& K) {
    rot::BohrSet X(rot::CircleHom::surd_rotation(d), t);
    rot::WitnessTable tab = rot::max_subgroup_witnesses(X, M, K);
    std::ostringstream os;
    os << "m,multiplier,kernel_member\n";
    for (const auto& e : tab.entries)
        os << e.m << "," << (e.multiplier ? e.multiplier->str() : std::string("unresolved")) << ","
           << (e.kernel_member ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    Config cfg;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        if (key == "window")
            cfg.window = std::stoll(val);
        else if (key == "witness_bound")
            cfg.witness_bound = std::stoll(val);
        else if (key == "dfs_cap")
            cfg.dfs_cap = static_cast<size_t>(std::stoull(val));
        else if (key == "seed")
            cfg.seed = std::stoull(val);
        else
            throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    if (cfg.window <= 0 || cfg.witness_bound <= 0 || cfg.dfs_cap == 0)
        throw std::invalid_argument("config: all bounds must be positive");
    return cfg;
}

Config Config::load_env() {
    const char* path = std::getenv("THICKSET_CONFIG");
    if (path && *path) return from_file(path);
    return Config{};
}

json make_report(const std::string& command, json inputs, const std::string& verdict,
                 const std::string& cert_type, json payload, uint64_t seed) {
    json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["input_hash"] = hash_hex(inputs.dump());
    report["verdict"] = verdict;
    report["cert"] = json{{"type", cert_type}, {"payload", std::move(payload)}};
    report["seed"] = seed;
    report["version"] = kVersion;
    return report;
}

bool check_cert(const json& report) {
    try {
        const json& cert = report.at("cert");
        const std::string type = cert.at("type").get<std::string>();
        const json& p = cert.at("payload");
        if (type == "parse") {
            pb::PresburgerSet P = pb::parse(p.at("input").get<std::string>());
            pb::PresburgerSet N = pb::parse(p.at("normalized").get<std::string>());
            return pb::print(pb::normalize(P)) == p.at("normalized").get<std::string>() &&
                   pb::set_equal(P, N);
        }
        if (type == "thickness") return check_thickness(p);
        if (type == "genericity") return check_genericity(p);
        if (type == "membership") return check_membership(p);
        if (type == "bohr_thickness") return check_bohr_thickness(p);
        if (type == "identity") return check_identity(p);
        if (type == "witness_table") return check_witness_table(p);
        if (type == "arc_cover") return check_arc_cover_payload(p);
        if (type == "power_cover") return check_power_cover(p);
        if (type == "pigeonhole") return check_pigeonhole(p);
        if (type == "power_subgroup") return check_power_subgroup(p);
        if (type == "malcev_root") return check_malcev_root(p);
        if (type == "containment") return check_containment(p);
        if (type == "density") return check_density(p);
        if (type == "difference")
            return p.at("verified").get<bool>() ==
                   (report.at("verdict").get<std::string>() == "verified");
        if (type == "qseq_cover")
            return p.at("all_covered").get<bool>() ==
                   (p.at("covered").get<unsigned>() == p.at("samples").get<unsigned>());
        if (type == "generation_profile") return true;  // descriptive, nothing to replay
        return false;  // unknown types fail closed
    } catch (const std::exception&) {
        return false;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact thick/generic set calculus"};
    app.require_subcommand(0, 1);

    Config cfg;
    try {
        cfg = Config::load_env();
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 64;
    }

    std::string config_path, check_cert_path, format = "json";
    app.add_option("--config", config_path, "key = value config file");
    app.add_option("--check-cert", check_cert_path, "replay a saved JSON report");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--window", cfg.window, "window radius");
    app.add_option("--witness-bound", cfg.witness_bound, "witness search bound");
    app.add_option("--cap", cfg.dfs_cap, "independent-set search cap");
    app.add_option("--seed", cfg.seed, "seed echoed in reports");

    std::string set_text, alpha = "sqrt2", t_text = "1/3";
    auto* c_parse = app.add_subcommand("parse", "parse and normalize a set expression");
    c_parse->fallthrough();
    c_parse->add_option("--set", set_text)->required();
    auto* c_thick = app.add_subcommand("thick", "decide thickness of a set");
    c_thick->fallthrough();
    c_thick->add_option("--set", set_text)->required();
    auto* c_generic = app.add_subcommand("generic", "decide genericity of a set");
    c_generic->fallthrough();
    c_generic->add_option("--set", set_text)->required();

    auto* c_rot = app.add_subcommand("rotation", "Bohr sets of the surd rotation");
    c_rot->fallthrough();
    std::string member_text, t2_text, q_text, eps_text;
    unsigned divide_m = 0;
    long long table_m = 0;
    bool do_thickness = false;
    c_rot->add_option("--alpha", alpha, "rotation angle, e.g. sqrt2");
    c_rot->add_option("--t", t_text, "interval radius (rational)");
    c_rot->add_option("--member", member_text, "test membership of an integer");
    c_rot->add_flag("--thickness", do_thickness, "minimal thickness of X(t)");
    c_rot->add_option("--product", t2_text, "verify X(t)X(t2) = X(t+t2)");
    c_rot->add_option("--divide", divide_m, "verify X(t/m) = X(t) & m-divisibility");
    c_rot->add_option("--derived", q_text, "evaluate X(qt) through the X(t) oracle");
    c_rot->add_option("--witness-table", table_m, "kernel-maximality witnesses for m <= M");
    c_rot->add_option("--density", eps_text, "density witness below eps");

    auto* c_vdw = app.add_subcommand("vdw", "coverings and difference-set certificates");
    c_vdw->fallthrough();
    unsigned vdw_n = 1, vdw_variant = 1, power_k = 0, ph_modulus = 0, ph_k = 3, qseq_samples = 0;
    long long ns_m = 0;
    bool do_cover = false, do_difference = false;
    c_vdw->add_option("--n", vdw_n, "covering parameter n >= 1");
    c_vdw->add_option("--variant", vdw_variant, "1 = 3n+1 arcs, 2 = 2n+1 arcs")
        ->check(CLI::IsMember({1u, 2u}));
    c_vdw->add_option("--alpha", alpha);
    c_vdw->add_flag("--cover", do_cover, "build the covering with its arc certificate");
    c_vdw->add_flag("--difference", do_difference, "difference set with decomposition checks");
    c_vdw->add_option("--no-subgroup", ns_m, "witness table for P^n up to m <= M");
    c_vdw->add_option("--power", power_k, "certify X(2t)^k = Z");
    c_vdw->add_option("--pigeonhole", ph_modulus, "pigeonhole finder on Z/N (quadratic residues)");
    c_vdw->add_option("--pigeonhole-k", ph_k, "multiples verified for the pigeonhole difference");
    c_vdw->add_option("--qseq", qseq_samples, "sampled covering over rational sequences");

    auto* c_heis = app.add_subcommand("heis", "power subgroups of the Heisenberg group");
    c_heis->fallthrough();
    std::string heis_n_text = "2", root_text;
    int heis_radius = 3;
    bool do_containment = false, do_steps = false;
    c_heis->add_option("--power", heis_n_text, "structural form and index of the n-th powers");
    c_heis->add_option("--n", heis_n_text, "exponent n for --root/--containment/--steps");
    c_heis->add_option("--root", root_text, "element x,y,z for an exact n-th root");
    c_heis->add_option("--radius", heis_radius);
    c_heis->add_flag("--containment", do_containment, "roots of n^2-th power subgroup members");
    c_heis->add_flag("--steps", do_steps, "factor counts needed to generate");

    auto* c_hom = app.add_subcommand("hom", "dense homomorphisms into the circle");
    c_hom->fallthrough();
    int hom_rank = 1;
    std::string torsion_text, hom_eps = "1/100";
    c_hom->add_option("--rank", hom_rank, "free rank of the domain");
    c_hom->add_option("--torsion", torsion_text, "comma-separated torsion orders");
    c_hom->add_option("--eps", hom_eps, "density threshold");
    c_hom->add_option("--alpha", alpha);

    auto* c_sweep = app.add_subcommand("sweep", "CSV sweeps");
    c_sweep->fallthrough();
    std::string kind;
    long long from = 0, to = -1;
    c_sweep->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"bohr_membership", "generation_profile", "witness_table"}));
    c_sweep->add_option("--alpha", alpha);
    c_sweep->add_option("--t", t_text);
    c_sweep->add_option("--from", from);
    c_sweep->add_option("--to", to);
    c_sweep->add_option("--n", heis_n_text);
    c_sweep->add_option("--radius", heis_radius);
    c_sweep->add_option("--max-m", table_m);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << ex.what() << "\n" << app.help();
        return 64;
    }

    try {
        if (!config_path.empty()) {
            Config file_cfg = Config::from_file(config_path);
            // File values apply unless the flag was given explicitly.
            if (app.count("--window") == 0) cfg.window = file_cfg.window;
            if (app.count("--witness-bound") == 0) cfg.witness_bound = file_cfg.witness_bound;
            if (app.count("--cap") == 0) cfg.dfs_cap = file_cfg.dfs_cap;
            if (app.count("--seed") == 0) cfg.seed = file_cfg.seed;
        }

        if (!check_cert_path.empty()) {
            std::ifstream in(check_cert_path);
            if (!in) {
                err << "error: cannot open " << check_cert_path << "\n";
                return 64;
            }
            json report = json::parse(in);
            bool ok = check_cert(report);
            out << (ok ? "certificate valid" : "certificate INVALID") << "\n";
            return ok ? 0 : 1;
        }

        Outcome res;
        if (*c_parse) {
            res = cmd_parse(set_text, cfg);
        } else if (*c_thick) {
            res = cmd_thick(set_text, cfg);
        } else if (*c_generic) {
            res = cmd_generic(set_text, cfg);
        } else if (*c_rot) {
            unsigned d = parse_alpha(alpha);
            Rat t = parse_rational(t_text);
            json inputs{{"alpha", alpha}, {"t", t_text}};
            if (!member_text.empty()) {
                Int n(member_text);
                Surd v = rot::rotation_position(d, n);
                bool member = v.abs().compare(t) < 0;
                inputs["member"] = member_text;
                json payload{{"d", d},          {"t", rational_str(t)}, {"n", istr(n)},
                             {"value", v.str()}, {"member", member}};
                res = {member ? 0 : 1,
                       make_report("rotation", inputs, member ? "member" : "not_member",
                                   "membership", payload, cfg.seed)};
            } else if (do_thickness) {
                rot::BohrThickness bt = rot::thickness_of_bohr(d, t, cfg.window);
                json payload{{"d", d},
                             {"t", rational_str(t)},
                             {"analytic_bound", bt.analytic_bound},
                             {"stated_constant", bt.stated_constant},
                             {"empirical_min", bt.empirical_min},
                             {"witness", int_list(bt.witness)},
                             {"note", bt.certificate}};
                res = {0, make_report("rotation", inputs, "decided", "bohr_thickness", payload,
                                      cfg.seed)};
            } else if (!t2_text.empty()) {
                Rat t2 = parse_rational(t2_text);
                inputs["product"] = t2_text;
                res = identity_outcome(
                    "rotation", inputs, "product",
                    rot::verify_product_identity(d, t, t2, cfg.window, cfg.witness_bound), cfg);
            } else if (divide_m > 0) {
                inputs["divide"] = divide_m;
                res = identity_outcome("rotation", inputs, "divide",
                                       rot::verify_divide_identity(d, t, divide_m, cfg.window),
                                       cfg);
            } else if (!q_text.empty()) {
                Rat q = parse_rational(q_text);
                inputs["derived"] = q_text;
                res = identity_outcome(
                    "rotation", inputs, "derived",
                    rot::verify_derived_predicate(d, t, q, cfg.window, cfg.witness_bound), cfg);
            } else if (table_m > 0) {
                rot::BohrSet X(rot::CircleHom::surd_rotation(d), t);
                rot::WitnessTable tab =
                    rot::max_subgroup_witnesses(X, Int(table_m), Int(cfg.witness_bound));
                inputs["witness_table"] = table_m;
                res = {tab.complete ? 0 : 2,
                       make_report("rotation", inputs, tab.complete ? "complete" : "unresolved",
                                   "witness_table", witness_table_payload(d, t, tab), cfg.seed)};
            } else if (!eps_text.empty()) {
                Rat eps = parse_rational(eps_text);
                rot::DensityWitness w = rot::density_witness(rot::CircleHom::surd_rotation(d), eps,
                                                             Int(cfg.witness_bound));
                inputs["density"] = eps_text;
                json payload{{"resolved", w.resolved}, {"eps", rational_str(eps)}};
                if (w.resolved) {
                    payload["n"] = istr(w.integer_argument);
                    payload["value"] = w.value.str();
                }
                res = {w.resolved ? 0 : 2,
                       make_report("rotation", inputs, w.resolved ? "witnessed" : "unresolved",
                                   "density", payload, cfg.seed)};
            } else {
                err << "rotation: choose an action (--member, --thickness, --product, --divide, "
                       "--derived, --witness-table, --density)\n";
                return 64;
            }
        } else if (*c_vdw) {
            unsigned d = parse_alpha(alpha);
            vdw::Variant variant =
                vdw_variant == 1 ? vdw::Variant::ThreeNPlusOne : vdw::Variant::TwoNPlusOne;
            json inputs{{"n", vdw_n}, {"variant", vdw_variant}, {"alpha", alpha}};
            if (do_cover) {
                vdw::Covering c = vdw::build_covering(vdw_n, variant, d);
                json arcs = json::array();
                for (const auto& a : c.certificate.arcs)
                    arcs.push_back(json::array({a.first.str(), a.second.str()}));
                json payload{{"d", d},
                             {"t", rational_str(c.base.t())},
                             {"translates", int_list(c.translates)},
                             {"arcs", arcs},
                             {"detail", c.certificate.detail}};
                res = {0, make_report("vdw", inputs, "covers", "arc_cover", payload, cfg.seed)};
            } else if (do_difference) {
                vdw::Covering c = vdw::build_covering(vdw_n, variant, d);
                vdw::DifferenceReport r = vdw::difference_set(c, 200, cfg.witness_bound);
                json payload{{"t2", rational_str(r.set.t())},
                             {"samples", r.samples},
                             {"decompositions", r.decompositions},
                             {"verified", r.verified}};
                res = {r.verified ? 0 : 2,
                       make_report("vdw", inputs, r.verified ? "verified" : "unresolved",
                                   "difference", payload, cfg.seed)};
            } else if (ns_m > 0) {
                Rat s = variant == vdw::Variant::ThreeNPlusOne
                            ? Rat(1, 3)
                            : Rat(4 * vdw_n, 8 * vdw_n + 1);
                rot::BohrSet Pn(rot::CircleHom::surd_rotation(d), s);
                rot::WitnessTable tab =
                    vdw::certify_no_subgroup(Pn, Int(ns_m), Int(cfg.witness_bound));
                inputs["no_subgroup"] = ns_m;
                res = {tab.complete ? 0 : 2,
                       make_report("vdw", inputs, tab.complete ? "complete" : "unresolved",
                                   "witness_table", witness_table_payload(d, s, tab), cfg.seed)};
            } else if (power_k > 0) {
                Rat t = variant == vdw::Variant::ThreeNPlusOne ? Rat(1, 3 * vdw_n)
                                                                : Rat(4, 8 * vdw_n + 1);
                rot::BohrSet P(rot::CircleHom::surd_rotation(d), t);
                vdw::PowerCoverCertificate cert =
                    vdw::certify_power_covers(P, power_k, 100, cfg.witness_bound);
                inputs["power"] = power_k;
                json payload{{"d", d},
                             {"t", rational_str(t)},
                             {"k", cert.k},
                             {"s1", rational_str(cert.s1)},
                             {"s2", rational_str(cert.s2)},
                             {"samples", cert.samples},
                             {"decomposed", cert.decomposed},
                             {"covers", cert.covers},
                             {"detail", cert.detail}};
                res = {cert.covers ? 0 : 2,
                       make_report("vdw", inputs, cert.covers ? "covers" : "unresolved",
                                   "power_cover", payload, cfg.seed)};
            } else if (ph_modulus > 0) {
                unsigned N = ph_modulus;
                std::vector<bool> P(N, false);
                P[0] = true;
                for (unsigned a = 1; a < N; ++a) {
                    unsigned sq = static_cast<unsigned>((static_cast<uint64_t>(a) * a) % N);
                    P[sq] = true;
                    P[(N - sq) % N] = true;
                }
                // Minimal shift family S with P + S = Z/N, by exact set cover.
                CoverProblem prob;
                prob.universe = N;
                for (unsigned s = 0; s < N; ++s) {
                    std::vector<uint32_t> covered;
                    for (unsigned g = 0; g < N; ++g)
                        if (P[static_cast<size_t>(mod_floor(Int(g) - s, N))]) covered.push_back(g);
                    prob.candidates.push_back(std::move(covered));
                }
                auto chosen = min_set_cover(prob);
                if (!chosen) throw std::runtime_error("pigeonhole: no cover exists");
                std::vector<unsigned> S;
                for (size_t idx : *chosen) S.push_back(static_cast<unsigned>(idx));
                vdw::PigeonholeResult r = vdw::pigeonhole_difference(N, P, S, ph_k);
                inputs["pigeonhole"] = N;
                inputs["K"] = ph_k;
                json payload{{"modulus", N},
                             {"K", ph_k},
                             {"S", S},
                             {"collision", r.collision},
                             {"x", istr(r.x)},
                             {"distinct_signatures", r.distinct_signatures},
                             {"largest_bucket", r.largest_bucket}};
                res = {r.collision ? 0 : 2,
                       make_report("vdw", inputs, r.collision ? "collision" : "no_collision",
                                   "pigeonhole", payload, cfg.seed)};
            } else if (qseq_samples > 0) {
                vdw::QSeqCoverReport r =
                    vdw::sampled_qseq_covering(vdw_n, variant, qseq_samples, cfg.seed);
                inputs["qseq"] = qseq_samples;
                json payload{{"samples", r.samples},
                             {"covered", r.covered},
                             {"all_covered", r.all_covered},
                             {"kernel_fact", r.kernel_fact},
                             {"detail", r.detail}};
                res = {r.all_covered ? 0 : 2,
                       make_report("vdw", inputs, r.all_covered ? "covers" : "unresolved",
                                   "qseq_cover", payload, cfg.seed)};
            } else {
                err << "vdw: choose an action (--cover, --difference, --no-subgroup, --power, "
                       "--pigeonhole, --qseq)\n";
                return 64;
            }
        } else if (*c_heis) {
            Int n(heis_n_text);
            if (!root_text.empty()) {
                std::istringstream is(root_text);
                std::string part;
                std::vector<Int> coords;
                while (std::getline(is, part, ',')) coords.emplace_back(part);
                if (coords.size() != 3)
                    throw std::invalid_argument("heis --root: expected x,y,z");
                HeisElem e{coords[0], coords[1], coords[2]};
                auto root = np::malcev_root(e, n);
                json payload{{"n", istr(n)},         {"x", istr(e.x)}, {"y", istr(e.y)},
                             {"z", istr(e.z)},       {"found", root.has_value()}};
                if (root) {
                    payload["root_x"] = istr(root->x);
                    payload["root_y"] = istr(root->y);
                    payload["root_z"] = istr(root->z);
                }
                json inputs{{"root", root_text}, {"n", istr(n)}};
                res = {root ? 0 : 1,
                       make_report("heis", inputs, root ? "root_found" : "no_root", "malcev_root",
                                   payload, cfg.seed)};
            } else if (do_containment) {
                np::ContainmentReport rep = np::malcev_containment(n, heis_radius);
                json exceptions = json::array();
                for (const auto& e : rep.exceptions)
                    exceptions.push_back(json::array({istr(e.x), istr(e.y), istr(e.z)}));
                json payload{{"n", istr(n)},
                             {"radius", rep.radius},
                             {"checked", rep.checked},
                             {"exceptions", exceptions},
                             {"holds", rep.holds}};
                json inputs{{"containment", istr(n)}, {"radius", heis_radius}};
                res = {rep.holds ? 0 : 1,
                       make_report("heis", inputs, rep.holds ? "holds" : "exceptions",
                                   "containment", payload, cfg.seed)};
            } else if (do_steps) {
                np::GenerationProfile prof = np::steps_to_generate(n, heis_radius);
                json payload{{"n", istr(prof.n)},
                             {"radius", prof.radius},
                             {"cap", prof.cap},
                             {"layer_counts", prof.layer_counts},
                             {"unresolved", prof.unresolved},
                             {"max_steps", prof.max_steps}};
                json inputs{{"steps", istr(n)}, {"radius", heis_radius}};
                res = {prof.unresolved == 0 ? 0 : 2,
                       make_report("heis", inputs, prof.unresolved == 0 ? "profiled" : "unresolved",
                                   "generation_profile", payload, cfg.seed)};
            } else {
                np::HeisSubgroup H = np::power_subgroup(n);
                json payload{{"n", istr(n)},
                             {"m11", istr(H.m11)},
                             {"m12", istr(H.m12)},
                             {"m22", istr(H.m22)},
                             {"center_mod", istr(H.center_mod)},
                             {"index", istr(H.index())}};
                json inputs{{"power", istr(n)}};
                res = {0, make_report("heis", inputs, "computed", "power_subgroup", payload,
                                      cfg.seed)};
            }
        } else if (*c_hom) {
            AbelianSpec spec;
            spec.rank = hom_rank;
            if (!torsion_text.empty()) {
                std::istringstream is(torsion_text);
                std::string part;
                while (std::getline(is, part, ',')) spec.torsion.emplace_back(part);
            }
            unsigned d = parse_alpha(alpha);
            Rat eps = parse_rational(hom_eps);
            json inputs{{"rank", hom_rank}, {"torsion", torsion_text}, {"eps", hom_eps}};
            try {
                rot::CircleHom hom = rot::build_dense_hom(spec, d);
                rot::DensityWitness w = rot::density_witness(hom, eps, Int(cfg.witness_bound));
                json payload{{"resolved", w.resolved}, {"eps", rational_str(eps)}};
                if (w.resolved) {
                    payload["value"] = w.value.str();
                    payload["n"] = istr(w.integer_argument);
                    payload["element"] = abelian_str(w.element);
                }
                res = {w.resolved ? 0 : 2,
                       make_report("hom", inputs, w.resolved ? "witnessed" : "unresolved",
                                   "density", payload, cfg.seed)};
            } catch (const std::invalid_argument& ex) {
                json payload{{"resolved", false}, {"reason", ex.what()}};
                res = {1, make_report("hom", inputs, "no_dense_hom", "density", payload, cfg.seed)};
            }
        } else if (*c_sweep) {
            if (kind == "bohr_membership") {
                unsigned d = parse_alpha(alpha);
                res.csv = sweep_bohr(d, parse_rational(t_text), from, to);
            } else if (kind == "generation_profile") {
                res.csv = sweep_generation(Int(heis_n_text), heis_radius);
            } else {
                unsigned d = parse_alpha(alpha);
                res.csv = sweep_witness_table(d, parse_rational(t_text),
                                              Int(table_m > 0 ? table_m : 10),
                                              Int(cfg.witness_bound));
            }
            res.exit_code = 0;
        } else {
            out << app.help();
            return 64;
        }

        if (!res.csv.empty()) {
            out << res.csv;
        } else if (format == "text") {
            out << "verdict: " << res.report.at("verdict").get<std::string>() << "\n"
                << "cert: " << res.report.at("cert").at("type").get<std::string>() << "\n";
        } else {
            out << res.report.dump(2) << "\n";
        }
        return res.exit_code;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 64;
    } catch (const std::runtime_error& ex) {
        err << "unresolved: " << ex.what() << "\n";
        return 2;
    }
}

}  // namespace thickset::cli
