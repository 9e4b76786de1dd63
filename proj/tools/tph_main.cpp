// tph: spectral approximation toolkit for compact two-point homogeneous
// spaces.  Subcommands cover the space catalog, Jacobi evaluation, zonal
// function norms, multiplier tables, K-functional/modulus reports, Mercer
// kernel analysis, and the full verification suite.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tph/acceptance.hpp"
#include "tph/io.hpp"
#include "tph/jacobi.hpp"
#include "tph/mercer.hpp"
#include "tph/multipliers.hpp"
#include "tph/numerics.hpp"
#include "tph/smoothness.hpp"
#include "tph/spaces.hpp"
#include "tph/zonal.hpp"

namespace {

struct Globals {
    std::string format = "json";  // json | csv (table commands honor csv)
    std::uint64_t seed = 42;
    std::string out = "-";
};

double parse_p(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF")
        return std::numeric_limits<double>::infinity();
    return std::stod(text);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-" || path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

// one provenance line; kept deterministic so reports diff cleanly
std::string csv_banner(const std::string& command, const Globals& g) {
    return "# tph " + std::string(tph::toolkit_version) + " " + command +
           " seed=" + std::to_string(g.seed) + "\n";
}

tph::ordered_json config_json(const std::string& command, const Globals& g) {
    tph::ordered_json c;
    c["command"] = command;
    c["seed"] = g.seed;
    c["format"] = g.format;
    return c;
}

tph::ordered_json report_skeleton(const std::string& command, const Globals& g) {
    tph::ordered_json j;
    j["version"] = tph::toolkit_version;
    j["config"] = config_json(command, g);
    return j;
}

void emit_table(const Globals& g, const std::string& command,
                const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& cols,
                tph::ordered_json extra = {}) {
    if (g.format == "csv") {
        write_text(g.out, csv_banner(command, g) + tph::to_csv(header, cols));
        return;
    }
    tph::ordered_json j = report_skeleton(command, g);
    for (auto& [k, v] : extra.items()) j[k] = v;
    tph::ordered_json data;
    for (std::size_t c = 0; c < header.size(); ++c) data[header[c]] = cols[c];
    j["columns"] = data;
    tph::save_json(j, g.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral approximation toolkit on compact two-point homogeneous spaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global --seed/--out/--format may follow the subcommand

    Globals g;
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "seed for generated test functions");
    app.add_option("--out", g.out, "output path, '-' for stdout");

    // ---- space info ----
    std::string family = "sphere";
    int m = 2;
    auto* space_cmd = app.add_subcommand("space", "space catalog");
    auto* info = space_cmd->add_subcommand("info", "parameters of one space");
    info->add_option("--family", family, "family name")->required();
    info->add_option("--m", m, "real dimension")->required();
    info->callback([&] {
        tph::Space sp = tph::make_space(tph::family_from_name(family), m);
        tph::ordered_json j = report_skeleton("space info", g);
        j["family"] = tph::family_name(sp.family);
        j["m"] = sp.m;
        j["sigma"] = sp.sigma;
        j["rho"] = sp.rho;
        j["alpha"] = sp.alpha;
        j["beta"] = sp.beta;
        std::vector<double> lam, dim;
        for (int k = 0; k <= 8; ++k) {
            lam.push_back(tph::laplace_eigenvalue(sp, k));
            dim.push_back(tph::harmonic_dim(sp, k));
        }
        j["lambda"] = lam;
        j["dim"] = dim;
        tph::save_json(j, g.out);
    });

    // ---- jacobi eval / cosine-coeffs ----
    double ja = 0.0, jb = 0.0, jx = 0.0;
    int jk = 0;
    auto* jac = app.add_subcommand("jacobi", "Jacobi polynomial utilities");
    auto* jeval = jac->add_subcommand("eval", "P_k and Q_k at a point");
    jeval->add_option("--alpha", ja)->required();
    jeval->add_option("--beta", jb)->required();
    jeval->add_option("--k", jk)->required();
    jeval->add_option("--x", jx)->required();
    jeval->callback([&] {
        tph::JacobiIndex idx{ja, jb};
        tph::ordered_json j = report_skeleton("jacobi eval", g);
        j["alpha"] = ja;
        j["beta"] = jb;
        j["k"] = jk;
        j["x"] = jx;
        j["P"] = tph::jacobi_P(idx, jk, jx);
        j["P_at_one"] = tph::jacobi_P_at_one(idx, jk);
        j["Q"] = tph::jacobi_Q(idx, jk, jx);
        tph::save_json(j, g.out);
    });
    auto* jcos = jac->add_subcommand("cosine-coeffs", "cosine expansion of Q_k");
    jcos->add_option("--alpha", ja)->required();
    jcos->add_option("--beta", jb)->required();
    jcos->add_option("--k", jk)->required();
    jcos->callback([&] {
        std::vector<double> c = tph::cosine_coeffs(tph::JacobiIndex{ja, jb}, jk);
        std::vector<double> v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = double(i);
        tph::ordered_json extra;
        extra["alpha"] = ja;
        extra["beta"] = jb;
        extra["k"] = jk;
        emit_table(g, "jacobi cosine-coeffs", {"v", "coeff"}, {v, c}, extra);
    });

    // ---- fn norm / random ----
    std::string input, p_text = "2";
    int kmax = 128;
    double decay = 2.0;
    auto* fn = app.add_subcommand("fn", "zonal functions");
    auto* fnorm = fn->add_subcommand("norm", "L^p norm of a function file");
    fnorm->add_option("--input", input, "function JSON")->required();
    fnorm->add_option("--p", p_text, "exponent in [1, inf], 'inf' allowed");
    fnorm->callback([&] {
        tph::ZonalFunction f = tph::load_zonal(input);
        double p = parse_p(p_text);
        tph::ordered_json j = report_skeleton("fn norm", g);
        j["input"] = input;
        j["p"] = p_text;
        j["norm"] = tph::lp_norm(f, p);
        tph::save_json(j, g.out);
    });
    auto* frand = fn->add_subcommand("random", "seeded random test function");
    frand->add_option("--family", family)->required();
    frand->add_option("--m", m)->required();
    frand->add_option("--kmax", kmax);
    frand->add_option("--decay", decay, "coefficient decay exponent");
    frand->callback([&] {
        tph::Space sp = tph::make_space(tph::family_from_name(family), m);
        tph::save_json(tph::to_json(tph::random_function(sp, kmax, g.seed, decay)), g.out);
    });

    // ---- mult table / marcinkiewicz ----
    int ord = 1, jmax = 10, sdiff = 0;
    double t = 0.1, ascale = 1.0;
    std::string which = "mu1";
    auto* mult = app.add_subcommand("mult", "multiplier sequences");
    auto* mtable = mult->add_subcommand("table", "shift multipliers on one (r, t)");
    mtable->add_option("--family", family)->required();
    mtable->add_option("--m", m)->required();
    mtable->add_option("--r", ord)->required();
    mtable->add_option("--t", t)->required();
    mtable->add_option("--kmax", kmax);
    mtable->callback([&] {
        tph::Space sp = tph::make_space(tph::family_from_name(family), m);
        tph::QRecurrence rec = tph::q_recurrence(tph::jacobi_index(sp), std::max(kmax, 1));
        std::vector<double> q(kmax + 1);
        tph::jacobi_Q_column(rec, std::cos(t), kmax, q.data());
        std::vector<double> om = tph::one_minus_m_r(sp, ord, t, kmax);
        std::vector<double> ks(kmax + 1), mr(kmax + 1), ratio(kmax + 1);
        for (int k = 0; k <= kmax; ++k) {
            ks[k] = k;
            mr[k] = 1.0 - om[k];
            ratio[k] = k == 0 ? std::numeric_limits<double>::quiet_NaN()
                              : om[k] / std::pow(k * t, 2.0 * ord);
        }
        emit_table(g, "mult table", {"k", "Q_k", "m_r", "one_minus_m_r", "ratio_kt_power"},
                   {ks, q, mr, om, ratio});
    });
    auto* marc = mult->add_subcommand("marcinkiewicz", "dyadic block statistics");
    marc->add_option("--family", family)->required();
    marc->add_option("--m", m)->required();
    marc->add_option("--r", ord)->required();
    marc->add_option("--t", t)->required();
    marc->add_option("--a", ascale, "cutoff scale");
    marc->add_option("--which", which, "mu1 | mu2 | mu3")
        ->check(CLI::IsMember({"mu1", "mu2", "mu3"}));
    marc->add_option("--jmax", jmax);
    marc->add_option("--s", sdiff, "difference order (default: smallest integer > m/2)");
    marc->callback([&] {
        tph::Space sp = tph::make_space(tph::family_from_name(family), m);
        int s = sdiff > 0 ? sdiff : tph::marcinkiewicz_order(sp);
        int need = (1 << (jmax + 1)) + s + 4;
        auto seqs = tph::proof_sequences(sp, ord, t, ascale, need);
        int pick = which == "mu1" ? 0 : which == "mu2" ? 1 : 2;
        tph::MarcinkiewiczReport rep = tph::marcinkiewicz_report(seqs[pick], s, jmax);
        std::vector<double> js(rep.block.size());
        for (std::size_t i = 0; i < js.size(); ++i) js[i] = double(i);
        tph::ordered_json extra;
        extra["which"] = which;
        extra["s"] = rep.s;
        extra["sup_abs"] = rep.sup_abs;
        extra["bound"] = rep.bound;
        emit_table(g, "mult marcinkiewicz", {"j", "block_stat"}, {js, rep.block}, extra);
    });

    // ---- kfunc report ----
    double tmin = 0.01, tmax = 1.0;
    int points = 32;
    auto* kf = app.add_subcommand("kfunc", "K-functional machinery");
    auto* krep = kf->add_subcommand("report", "equivalence columns over a t grid");
    krep->add_option("--fn", input, "function JSON")->required();
    krep->add_option("--r", ord);
    krep->add_option("--p", p_text);
    krep->add_option("--tmin", tmin);
    krep->add_option("--tmax", tmax);
    krep->add_option("--points", points);
    krep->callback([&] {
        tph::ZonalFunction f = tph::load_zonal(input);
        double p = parse_p(p_text);
        tph::EquivalenceReport rep =
            tph::equivalence_report(f, ord, tph::geomspace(tmin, tmax, points), p);
        std::vector<std::string> header = {"t"};
        std::vector<std::vector<double>> cols = {rep.t_grid};
        for (const auto& [name, v] : rep.columns) {
            header.push_back(name);
            cols.push_back(v);
        }
        tph::ordered_json extra;
        for (const auto& [name, v] : rep.ratio_spread) extra["spread " + name] = v;
        emit_table(g, "kfunc report", header, cols, extra);
    });

    // ---- kernel example / decay / nwidth ----
    double eps = 0.5, beta = 1.0, n_lo = 0.0, n_hi = 0.0, slope_tol = 0.1;
    std::string mode = "holder";
    std::int64_t nidx = 0;
    double rfrac = 1.0;
    auto* kern = app.add_subcommand("kernel", "Mercer kernels");
    auto* kex = kern->add_subcommand("example", "power-law kernel family");
    kex->add_option("--family", family)->required();
    kex->add_option("--m", m)->required();
    kex->add_option("--eps", eps)->required();
    kex->add_option("--r", ord)->required();
    kex->add_option("--kmax", kmax)->required();
    kex->callback([&] {
        tph::MercerKernel k =
            tph::example_kernel(tph::family_from_name(family), m, eps, ord, kmax);
        if (!k.note.empty()) std::cerr << "note: " << k.note << "\n";
        tph::save_json(tph::to_json(k), g.out);
    });
    auto* kdec = kern->add_subcommand("decay", "eigenvalue decay verdict");
    kdec->add_option("--input", input, "kernel JSON")->required();
    kdec->add_option("--mode", mode)->check(CLI::IsMember({"holder", "sobolev"}));
    kdec->add_option("--beta", beta, "Holder exponent (mode holder)");
    kdec->add_option("--r", rfrac, "derivative order (mode sobolev)");
    kdec->add_option("--n-lo", n_lo, "fit window start (0 = automatic)");
    kdec->add_option("--n-hi", n_hi, "fit window end (0 = automatic)");
    kdec->add_option("--slope-tol", slope_tol);
    kdec->callback([&] {
        bool collapsed = false;
        tph::MercerKernel k = tph::load_kernel(input, &collapsed);
        if (collapsed)
            std::cerr << "warning: per_j rows collapsed to their degree maximum\n";
        tph::DecayReport rep =
            mode == "holder"
                ? tph::decay_verdict_holder(k, beta, slope_tol, n_lo, n_hi)
                : tph::decay_verdict_sobolev(k, rfrac, slope_tol, n_lo, n_hi);
        tph::ordered_json j = report_skeleton("kernel decay", g);
        j["input"] = input;
        j["mode"] = mode;
        j[mode == "holder" ? "beta" : "r"] = mode == "holder" ? beta : rfrac;
        j["fitted_slope"] = rep.fitted_slope;
        j["target_slope"] = rep.target_slope;
        j["slope_tol"] = rep.slope_tol;
        j["sup_last_decade_max"] = rep.sup_last_decade_max;
        j["sup_window_median"] = rep.sup_window_median;
        j["fit_window"] = {rep.n_lo, rep.n_hi};
        j["slope_ok"] = rep.slope_ok;
        j["sup_ok"] = rep.sup_ok;
        j["verdict"] = rep.verdict ? "pass" : "fail";
        j["diagnostic"] = rep.diagnostic;
        tph::save_json(j, g.out);
        if (!rep.verdict) throw CLI::RuntimeError("decay verdict failed", 3);
    });
    auto* knw = kern->add_subcommand("nwidth", "Kolmogorov n-width");
    knw->add_option("--input", input, "kernel JSON")->required();
    knw->add_option("--n", nidx)->required();
    knw->callback([&] {
        bool collapsed = false;
        tph::MercerKernel k = tph::load_kernel(input, &collapsed);
        if (collapsed)
            std::cerr << "warning: per_j rows collapsed to their degree maximum\n";
        tph::ordered_json j = report_skeleton("kernel nwidth", g);
        j["input"] = input;
        j["n"] = nidx;
        j["kappa"] = tph::n_width(k, nidx);
        tph::save_json(j, g.out);
    });

    // ---- verify-all ----
    auto* verify = app.add_subcommand("verify-all", "run the twelve-point suite");
    verify->callback([&] {
        std::vector<tph::CriterionResult> rs = tph::run_acceptance(g.seed, &std::cerr);
        tph::ordered_json j;
        j["version"] = tph::toolkit_version;
        tph::ordered_json c;
        c["command"] = "verify-all";
        c["seed"] = g.seed;
        j["config"] = c;  // no timings anywhere below: byte-identical reruns
        bool all = true;
        tph::ordered_json arr = tph::ordered_json::array();
        std::string failing;
        for (const auto& r : rs) {
            tph::ordered_json e;
            e["id"] = r.id;
            e["name"] = r.name;
            e["pass"] = r.pass;
            e["detail"] = r.detail;
            arr.push_back(e);
            all = all && r.pass;
            if (!r.pass) failing += (failing.empty() ? "" : ", ") + r.name;
        }
        j["criteria"] = arr;
        j["all_pass"] = all;
        tph::save_json(j, g.out);
        if (!all) {
            std::cerr << "failing criteria: " << failing << "\n";
            throw CLI::RuntimeError("verification failed", 2);
        }
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
