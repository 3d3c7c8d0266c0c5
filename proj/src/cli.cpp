#include "tlf/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tlf/asw.hpp"
#include "tlf/expr.hpp"
#include "tlf/forms.hpp"
#include "tlf/jsonio.hpp"
#include "tlf/milnor.hpp"
#include "tlf/pairing.hpp"
#include "tlf/residue.hpp"
#include "tlf/selftest.hpp"
#include "tlf/weil.hpp"
#include "tlf/witt.hpp"

namespace tlf {
namespace {

struct Common {
    int p = 2, e = 1, m = 1;
    std::string t_window = "-8:8";
    std::string pi_window = "-8:8";
    uint64_t seed = 1;
    std::string output = "json";
};

void add_common(CLI::App* sc, Common& cm) {
    sc->add_option("--p", cm.p, "residue characteristic (2, 3 or 5)")->envname("TLF_P");
    sc->add_option("--e", cm.e, "extension degree over F_p (1..3)")->envname("TLF_E");
    sc->add_option("--m", cm.m, "Witt length (1..4)")->envname("TLF_M");
    sc->add_option("--t-window", cm.t_window, "default t-precision window lo:hi")
        ->envname("TLF_T_WINDOW");
    sc->add_option("--pi-window", cm.pi_window, "default pi-precision window lo:hi")
        ->envname("TLF_PI_WINDOW");
    sc->add_option("--seed", cm.seed, "seed for seeded procedures")->envname("TLF_SEED");
    sc->add_option("--output", cm.output, "report format: json (default), csv or text")
        ->envname("TLF_OUTPUT");
}

long long parse_ll(const std::string& s) {
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'");
    return v;
}

std::pair<int, int> parse_window(const std::string& s, const char* which) {
    size_t colon = s.find(':');
    if (colon == std::string::npos)
        throw ParseError(std::string(which) + " window must be lo:hi");
    long long lo = parse_ll(s.substr(0, colon));
    long long hi = parse_ll(s.substr(colon + 1));
    if (lo > hi) throw ParseError(std::string(which) + " window has lo > hi");
    if (lo < -512 || hi > 512)
        throw ParseError(std::string(which) + " window bounds must stay within [-512, 512]");
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

Context make_context(const Common& cm) {
    if (cm.p != 2 && cm.p != 3 && cm.p != 5) throw ParseError("p must be 2, 3 or 5");
    if (cm.e < 1 || cm.e > 3) throw ParseError("e must be in 1..3");
    if (cm.m < 1 || cm.m > 4) throw ParseError("m must be in 1..4");
    if (cm.p == 5 && cm.m > 3) throw ParseError("p = 5 supports m <= 3");
    auto [tl, th] = parse_window(cm.t_window, "t");
    auto [pl, ph] = parse_window(cm.pi_window, "pi");
    return Context{cm.p, cm.e, cm.m, tl, th, pl, ph, cm.seed};
}

// Witt-vector results: single-slot vectors print as their bare series.
std::string witt_str(const WVec& v) {
    return v.size() == 1 ? render_k(v[0]) : render_witt(v);
}

Json form2_json(const Form2& x) {
    Json j;
    j["c"] = render_k(x.c);
    j["basis"] = "log";
    return j;
}

WindowSpec make_window(const std::string& t, const std::string& pi, long long n,
                       const char* which) {
    auto [tl, th] = parse_window(t, which);
    auto [pl, ph] = parse_window(pi, which);
    return WindowSpec{tl, th, pl, ph, n};
}

} // namespace

CliResult dispatch(const std::vector<std::string>& args) {
    CLI::App app{"exact calculator for F_q((t))((pi)): Witt conductors, residues, "
                 "symbol pairings and reciprocity"};
    app.require_subcommand(1);

    Common cm;

    std::string op, which, map_name, af, ag;
    std::string arg_a, arg_b;
    long long level_n = 0;
    std::string rows_t = "0:0", rows_pi = "0:0", cols_t = "0:0", cols_pi = "0:0";
    std::string w_t = "0:0", w_pi = "0:0";

    CLI::App* c_witt = app.add_subcommand("witt", "Witt vector arithmetic");
    add_common(c_witt, cm);
    c_witt->add_option("--op", op,
                       "add | sub | mul | neg | frob | vshift | rdrop | one-minus-frob")
        ->required();
    c_witt->add_option("a", arg_a, "Witt vector literal [x0; x1; ...]")->required();
    c_witt->add_option("b", arg_b, "second operand for binary ops");

    CLI::App* c_reduce = app.add_subcommand("reduce", "canonical character representative");
    add_common(c_reduce, cm);
    c_reduce->add_option("a", arg_a, "Witt vector literal")->required();

    CLI::App* c_cond = app.add_subcommand("conductor", "Artin-Schreier-Witt conductor");
    add_common(c_cond, cm);
    c_cond->add_option("a", arg_a, "Witt vector literal")->required();

    CLI::App* c_cart = app.add_subcommand("cartier", "Cartier operator on 2-forms");
    add_common(c_cart, cm);
    c_cart->add_option("form", arg_a, "2-form, e.g. \"t*pi^2*dlog t^dlog pi\"")->required();

    CLI::App* c_res = app.add_subcommand("residue", "residue maps");
    add_common(c_res, cm);
    c_res->add_option("--map", map_name, "resK | resf | ResK | chif")->required();
    c_res->add_option("expr", arg_a, "2-form (resK, ResK), 1-form b*dt (resf), or t-series (chif)")
        ->required();

    CLI::App* c_tame = app.add_subcommand("tame", "tame symbol of a K_2 element");
    add_common(c_tame, cm);
    c_tame->add_option("symbol", arg_a, "symbol sum, e.g. \"{t,pi}+{1+pi,t}\"")->required();

    CLI::App* c_dlog = app.add_subcommand("dlog", "dlog wedge of a K_2 element");
    add_common(c_dlog, cm);
    c_dlog->add_option("symbol", arg_a, "symbol sum")->required();

    CLI::App* c_split = app.add_subcommand("split", "kill the tame part of a symbol");
    add_common(c_split, cm);
    c_split->add_option("symbol", arg_a, "symbol sum")->required();

    CLI::App* c_pair = app.add_subcommand("pair", "duality / reciprocity pairings");
    add_common(c_pair, cm);
    c_pair->add_option("--which", which, "dual | rec")->required();
    c_pair->add_option("--n", level_n, "filtration level (dual)");
    c_pair->add_option("x", arg_a, "series (dual: fbar; rec: character slot)")->required();
    c_pair->add_option("y", arg_b, "dual: 2-form eta; rec: symbol")->required();

    CLI::App* c_gram = app.add_subcommand("gram", "pairing matrix over a window");
    add_common(c_gram, cm);
    c_gram->add_option("--which", which, "dual | rec")->required();
    c_gram->add_option("--n", level_n, "filtration level");
    c_gram->add_option("--rows-t", rows_t, "row window in t, lo:hi")->required();
    c_gram->add_option("--rows-pi", rows_pi, "row window in pi, lo:hi")->required();
    c_gram->add_option("--cols-t", cols_t, "column window in t, lo:hi")->required();
    c_gram->add_option("--cols-pi", cols_pi, "column window in pi, lo:hi")->required();

    CLI::App* c_varpi = app.add_subcommand("varpi-rank", "growth rank of the fil_n quotient");
    add_common(c_varpi, cm);
    c_varpi->add_option("--n", level_n, "filtration level (>= 1)")->required();
    c_varpi->add_option("--w-t", w_t, "window in t, lo:hi")->required();
    c_varpi->add_option("--w-pi", w_pi, "window in pi, lo:hi")->required();

    CLI::App* c_weil = app.add_subcommand("weil", "Weil reciprocity over F_q(T)");
    add_common(c_weil, cm);
    c_weil->add_option("--f", af, "rational function, poly or poly/poly in T")->required();
    c_weil->add_option("--g", ag, "rational function")->required();

    CLI::App* c_self = app.add_subcommand("selftest", "deterministic invariant battery");
    add_common(c_self, cm);

    try {
        std::vector<const char*> argv;
        argv.push_back("tlf");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        return {0, app.help(), ""};
    } catch (const CLI::ParseError& pe) {
        return {1, "", std::string(pe.what()) + "\n"};
    }

    try {
        Context ctx = make_context(cm);
        OutputFormat fmt = parse_output_format(cm.output);
        CLI::App* sub = app.get_subcommands().front();
        Json doc = envelope(sub->get_name(), ctx);

        if (sub == c_witt) {
            WittOps<KLaurent> W(ctx.p, ctx.m, ProtoRingCtx<KLaurent>{ctx.k_zero()});
            WVec a = parse_witt(ctx, arg_a);
            bool binary = op == "add" || op == "sub" || op == "mul";
            if (binary && arg_b.empty())
                throw ParseError("--op " + op + " needs a second operand");
            if (!binary && !arg_b.empty())
                throw ParseError("--op " + op + " takes a single operand");
            WVec r;
            if (op == "add") r = W.add(a, parse_witt(ctx, arg_b));
            else if (op == "sub") r = W.sub(a, parse_witt(ctx, arg_b));
            else if (op == "mul") r = W.mul(a, parse_witt(ctx, arg_b));
            else if (op == "neg") r = W.neg(a);
            else if (op == "frob") r = W.frob(a);
            else if (op == "vshift") r = W.vshift(a);
            else if (op == "rdrop") r = W.rdrop(a);
            else if (op == "one-minus-frob") r = W.one_minus_frob(a);
            else throw ParseError("unknown --op '" + op + "'");
            doc["result"] = witt_str(r);
        } else if (sub == c_reduce) {
            Asw asw(ctx);
            auto red = asw.reduce(parse_witt(ctx, arg_a));
            doc["reduced"] = witt_str(red.reduced);
            doc["shift"] = witt_str(red.shift);
            doc["conductor"] = asw.fil_level(red.reduced);
        } else if (sub == c_cond) {
            Asw asw(ctx);
            auto red = asw.reduce(parse_witt(ctx, arg_a));
            doc["conductor"] = asw.fil_level(red.reduced);
            doc["reduced"] = witt_str(red.reduced);
        } else if (sub == c_cart) {
            doc.update(form2_json(cartier2(ctx, parse_form2(ctx, arg_a))));
        } else if (sub == c_res) {
            if (map_name == "resK") {
                FormF1 r = res_K(ctx, parse_form2(ctx, arg_a));
                doc["c"] = render_f(r.c);
                doc["basis"] = "dt";
            } else if (map_name == "resf") {
                doc["result"] = res_f(parse_formf(ctx, arg_a)).to_string();
            } else if (map_name == "ResK") {
                doc["result"] = Res_K(ctx, parse_form2(ctx, arg_a));
            } else if (map_name == "chif") {
                doc["result"] = chi_f(parse_f(ctx, arg_a));
            } else {
                throw ParseError("unknown --map '" + map_name + "'");
            }
        } else if (sub == c_tame) {
            doc["result"] = render_f(tame(ctx, parse_symbol(ctx, arg_a)));
        } else if (sub == c_dlog) {
            doc.update(form2_json(sym_dlog(ctx, parse_symbol(ctx, arg_a))));
        } else if (sub == c_split) {
            doc["result"] = render_symbol(split_phi(ctx, parse_symbol(ctx, arg_a)));
        } else if (sub == c_pair) {
            if (which == "dual") {
                doc["value"] = dual_pair(ctx, parse_k(ctx, arg_a), level_n,
                                         parse_form2(ctx, arg_b));
            } else if (which == "rec") {
                doc["value"] = rec_pair(ctx, parse_k(ctx, arg_a), parse_symbol(ctx, arg_b));
            } else {
                throw ParseError("--which must be dual or rec");
            }
        } else if (sub == c_gram) {
            Which wkind;
            if (which == "dual") wkind = Which::dual;
            else if (which == "rec") wkind = Which::rec;
            else throw ParseError("--which must be dual or rec");
            WindowSpec rows = make_window(rows_t, rows_pi, level_n, "rows");
            WindowSpec cols = make_window(cols_t, cols_pi, level_n, "cols");
            Gram g = gram_matrix(ctx, rows, cols, wkind);
            doc["rows"] = g.mat.n_rows;
            doc["cols"] = g.mat.n_cols;
            doc["rank"] = g.rank;
            doc["entries"] = matrix_json(g.mat);
        } else if (sub == c_varpi) {
            if (level_n < 1) throw ParseError("--n must be >= 1");
            WindowSpec w = make_window(w_t, w_pi, 0, "w");
            doc["rank"] = varpi_window_rank(ctx, static_cast<int>(level_n), w);
        } else if (sub == c_weil) {
            const FqCtx& fq = ctx.fq();
            WeilCertificate cert = weil_check(fq, parse_ratfun(fq, af), parse_ratfun(fq, ag));
            doc["ok"] = cert.ok;
            doc["product"] = cert.product.to_string();
            Json facs = Json::array();
            for (const auto& pf : cert.factors) {
                Json f;
                f["place"] = pf.place.to_string();
                f["local"] = pf.local.to_string();
                f["norm"] = pf.norm.to_string();
                facs.push_back(std::move(f));
            }
            doc["factors"] = std::move(facs);
        } else if (sub == c_self) {
            doc.update(selftest_json(ctx));
        }

        return {0, emit_doc(doc, fmt), ""};
    } catch (const ParseError& pe) {
        return {1, "", std::string("usage error: ") + pe.what() + "\n"};
    } catch (const DomainError& de) {
        return {2, "", std::string("domain error: ") + de.what() + "\n"};
    } catch (const std::exception& ex) {
        return {2, "", std::string("error: ") + ex.what() + "\n"};
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CliResult r = dispatch(args);
    if (!r.out.empty()) std::fwrite(r.out.data(), 1, r.out.size(), stdout);
    if (!r.err.empty()) std::fwrite(r.err.data(), 1, r.err.size(), stderr);
    return r.code;
}

} // namespace tlf
