#include "pbdiag/cdga.hpp"
#include "pbdiag/cobar_bar.hpp"
#include "pbdiag/cocycle.hpp"
#include "pbdiag/io.hpp"
#include "pbdiag/lie.hpp"
#include "pbdiag/properties.hpp"
#include "pbdiag/theta.hpp"
#include "pbdiag/tree_space.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace pbdiag;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitSelftest = 3;

struct Globals {
    int m = 3;
    int n = 3;
    std::string quotient = "Dbar";
    std::string convention = "samelson";
    std::string format = "json";
    long long cap = 0;
    unsigned long long seed = 1;

    Context ctx() const { return {m, n, quotient_from_name(quotient)}; }
    Convention conv() const {
        if (convention == "samelson") return Convention::samelson;
        if (convention == "whitehead") return Convention::whitehead;
        throw DomainError("unknown convention: " + convention);
    }
    bool text() const { return format == "text"; }
};

// An argument is a file path if one exists, "-" or empty means stdin, anything else is literal JSON.
std::string read_source(const std::string& arg) {
    if (arg.empty() || arg == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw DomainError("cannot read " + arg);
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    return arg;
}

Json read_json(const std::string& arg) { return parse_json(read_source(arg)); }

bool is_word_json(const Json& j) { return j.is_object() && j.contains("side"); }

// A bare diagram object is accepted wherever a combo is expected.
Json as_combo_json(const Json& j) {
    if (j.is_object() && j.contains("edges")) return Json{{"terms", Json::array({Json{{"coeff", "1/1"}, {"diagram", j}}})}};
    return j;
}

template <class C>
void emit(const Globals& g, const C& x) {
    if (g.text())
        std::cout << to_text(x);
    else
        std::cout << to_json(x).dump() << "\n";
}

void emit_json(const Json& j) { std::cout << j.dump() << "\n"; }

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw DomainError("expected a comma-separated integer list, got \"" + s + "\"");
        }
    }
    return out;
}

std::string transcript_line(const BarWord& w, const Rational& c) {
    std::string s = rational_to_string(c) + " ∫";
    bool vanishes = false;
    for (const auto& d : w) {
        s += " I(" + to_text(d) + ")";
        vanishes = vanishes || has_multi_edge(d);
    }
    if (vanishes) s += "   [vanishes: a factor has a multiple edge]";
    return s;
}

int run_selftest(const Globals& g, int cases) {
    bool ok = true;
    Json report = Json::array();
    for (const auto& r : run_property_suite(g.seed, cases)) {
        ok = ok && r.ok();
        if (g.text())
            std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)"
                      << (r.ok() ? "" : ": " + r.first_failure) << "\n";
        else
            report.push_back(Json{{"property", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"first_failure", r.first_failure}});
    }
    if (!g.text()) emit_json(Json{{"seed", g.seed}, {"ok", ok}, {"properties", report}});
    return ok ? 0 : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-complex calculator for diagram models of pure-braid spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--m", g.m, "number of strands")->capture_default_str();
    app.add_option("--n", g.n, "ambient dimension")->capture_default_str();
    app.add_option("--quotient", g.quotient, "Dbar or D")->check(CLI::IsMember({"Dbar", "D"}))->capture_default_str();
    app.add_option("--convention", g.convention, "samelson or whitehead")
        ->check(CLI::IsMember({"samelson", "whitehead"}))
        ->capture_default_str();
    app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--cap", g.cap, "enumeration and permutation cap");
    app.add_option("--seed", g.seed, "seed for randomized property runs")->capture_default_str();

    std::string in1, in2, bracket_text, leaves_text;
    bool flag_dual = false, flag_tilde = false, flag_sign = false, flag_milnor = false, flag_oracle = false;
    int length = 0, r = 0, edges = -1, free_count = -1, p = 0, q = 0, weight = -1, gens = 0, cases = 200;
    std::string lie_degree;

    auto* diff = app.add_subcommand("diff", "edge-contraction differential of a diagram combo");
    diff->add_option("input", in1, "JSON, file path, or - for stdin");
    auto* ddiff = app.add_subcommand("dual-diff", "blow-up differential of a dual combo");
    ddiff->add_option("input", in1);
    auto* mult = app.add_subcommand("mult", "superposition product of two combos");
    mult->add_option("left", in1)->required();
    mult->add_option("right", in2)->required();
    mult->add_flag("--dual", flag_dual, "multiply dual combos");
    auto* bdiff = app.add_subcommand("bar-diff", "bar differential, or its dual for \"side\":\"cobar\" input");
    bdiff->add_option("input", in1);
    auto* shuffle = app.add_subcommand("shuffle", "shuffle product of two bar combos");
    shuffle->add_option("left", in1)->required();
    shuffle->add_option("right", in2)->required();
    auto* pairc = app.add_subcommand("pair", "pairing of a dual (cobar) value with a primal (bar) value");
    pairc->add_option("dual", in1)->required();
    pairc->add_option("primal", in2)->required();
    auto* theta_c = app.add_subcommand("theta", "Θ of a bracket expression");
    theta_c->add_option("--bracket", bracket_text, "e.g. [[3,1],[3,2]]");
    theta_c->add_flag("--tilde", flag_tilde, "project to trees");
    theta_c->add_flag("--sign", flag_sign, "print the sign table entry for (n, m)");
    auto* tree_c = app.add_subcommand("tree", "T(B) of a bracket, or the IHX quotient for a leaf multiset");
    tree_c->add_option("--bracket", bracket_text);
    tree_c->add_option("--leaves", leaves_text, "comma-separated leaf labels");
    tree_c->add_option("--pair", in1, "tree combo to pair against T(B)");
    auto* lift_c = app.add_subcommand("lift", "lift a primitive cocycle to a bar cocycle");
    lift_c->add_option("input", in1);
    auto* verify_c = app.add_subcommand("verify", "check d_B z = 0");
    verify_c->add_option("input", in1);
    auto* hom_c = app.add_subcommand("homology", "primitive homology dimension at a bracket length");
    hom_c->add_option("--length", length)->required();
    hom_c->add_flag("--oracle", flag_oracle, "also print the free graded Lie dimension");
    auto* dims_c = app.add_subcommand("dims", "dimension formulas");
    dims_c->add_flag("--milnor", flag_milnor, "P_r(m) and M_r(m)");
    dims_c->add_option("--r", r);
    dims_c->add_option("--generators", gens, "free Lie algebra: number of generators");
    dims_c->add_option("--length", length, "free Lie algebra: bracket length");
    dims_c->add_option("--degree", lie_degree, "free Lie algebra: generator degree (default n-2)");
    dims_c->add_option("--leaves", leaves_text, "tree quotient dimension for a leaf multiset");
    auto* enum_c = app.add_subcommand("enumerate", "enumerate diagrams or bar words");
    enum_c->add_option("--edges", edges);
    enum_c->add_option("--free", free_count);
    enum_c->add_option("--p", p, "bar word length");
    enum_c->add_option("--q", q, "bar internal degree");
    enum_c->add_option("--weight", weight, "total weight E - v");
    auto* yb_c = app.add_subcommand("yb-check", "Θ of every Yang-Baxter element is δ*-exact");
    auto* self_c = app.add_subcommand("selftest", "randomized property suite");
    self_c->add_option("--cases", cases)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitDomain;
    }

    try {
        if (g.cap > 0) {
            default_limits().candidates = g.cap;
            default_limits().permutations = g.cap;
        }

        if (*diff) {
            emit(g, differential(diagram_combo_from_json(as_combo_json(read_json(in1)))));
        } else if (*ddiff) {
            emit(g, dual_differential(dual_combo_from_json(as_combo_json(read_json(in1)))));
        } else if (*mult) {
            const Json a = as_combo_json(read_json(in1)), b = as_combo_json(read_json(in2));
            if (flag_dual)
                emit(g, dual_product(dual_combo_from_json(a), dual_combo_from_json(b)));
            else
                emit(g, product(diagram_combo_from_json(a), diagram_combo_from_json(b)));
        } else if (*bdiff) {
            const Json j = read_json(in1);
            if (j.value("side", "bar") == "cobar")
                emit(g, cobar_differential(cobar_combo_from_json(j)));
            else
                emit(g, bar_differential(bar_combo_from_json(j)));
        } else if (*shuffle) {
            emit(g, shuffle_product(bar_combo_from_json(read_json(in1)), bar_combo_from_json(read_json(in2))));
        } else if (*pairc) {
            const Json a = read_json(in1), b = read_json(in2);
            Rational v;
            if (is_word_json(a) || is_word_json(b)) {
                const CobarCombo x = is_word_json(a) ? cobar_combo_from_json(a) : as_length_one(dual_combo_from_json(as_combo_json(a)));
                const BarCombo y = is_word_json(b) ? bar_combo_from_json(b) : as_length_one(diagram_combo_from_json(as_combo_json(b)));
                v = pair(x, y);
            } else {
                v = pair(dual_combo_from_json(as_combo_json(a)), diagram_combo_from_json(as_combo_json(b)));
            }
            if (g.text())
                std::cout << rational_to_string(v) << "\n";
            else
                emit_json(Json{{"pair", rational_to_string(v)}});
        } else if (*theta_c) {
            if (flag_sign) {
                const int s = theta_sign(g.n, g.m, g.conv());
                if (g.text())
                    std::cout << s << "\n";
                else
                    emit_json(Json{{"n", g.n}, {"m", g.m}, {"convention", g.convention}, {"sign", s}});
            } else {
                if (bracket_text.empty()) throw DomainError("theta needs --bracket");
                const DualCombo th = theta(parse_bracket(bracket_text, g.conv()), g.ctx());
                if (flag_tilde)
                    emit(g, theta_tilde(th));
                else
                    emit(g, th);
            }
        } else if (*tree_c) {
            const Context ctx = g.ctx();
            if (!leaves_text.empty()) {
                const TreeQuotient tq = tree_quotient(ctx, parse_int_list(leaves_text));
                Json basis = Json::array();
                for (const auto& t : tq.basis()) basis.push_back(to_json(t));
                if (g.text()) {
                    std::cout << "dim " << tq.dimension() << "\n";
                    for (const auto& t : tq.basis()) std::cout << to_text(t) << "\n";
                } else {
                    emit_json(Json{{"dim", tq.dimension()}, {"basis", basis}});
                }
            } else {
                if (bracket_text.empty()) throw DomainError("tree needs --bracket or --leaves");
                const BracketExpr b = parse_bracket(bracket_text, g.conv());
                const TreeCombo t = tree_of_bracket(b, ctx);
                if (!in1.empty()) {
                    TreeCombo x;
                    for (const auto& [d, c] : dual_combo_from_json(as_combo_json(read_json(in1))).terms) {
                        Diagram k = d;
                        k.ctx.quotient = Quotient::Dbar;
                        x.add(k, c);
                    }
                    if (t.is_zero()) throw DomainError("T(B) is zero");
                    const auto& [key, sign] = *t.terms.begin();
                    const Rational v = tree_pair(x, key) * sign;
                    if (g.text())
                        std::cout << rational_to_string(v) << "\n";
                    else
                        emit_json(Json{{"pair", rational_to_string(v)}});
                } else {
                    emit(g, t);
                }
            }
        } else if (*lift_c) {
            const BarCombo z = lift_cocycle(diagram_combo_from_json(as_combo_json(read_json(in1))));
            if (g.text()) {
                std::cout << to_text(z);
                for (const auto& [w, c] : z.terms) std::cout << transcript_line(w, c) << "\n";
            } else {
                Json tr = Json::array();
                for (const auto& [w, c] : z.terms) tr.push_back(transcript_line(w, c));
                emit_json(Json{{"lift", to_json(z)}, {"transcript", tr}});
            }
        } else if (*verify_c) {
            std::cout << (verify_bar_cocycle(bar_combo_from_json(read_json(in1))) ? "true" : "false") << "\n";
        } else if (*hom_c) {
            const Context ctx = g.ctx();
            const int dim = primitive_homology_dim(ctx, length);
            Json out{{"m", g.m}, {"n", g.n}, {"quotient", g.quotient}, {"length", length}, {"dim", dim}};
            if (flag_oracle) {
                long long oracle = 0;
                for (int j = 2; j <= g.m; ++j) oracle += free_lie_dimension(j - 1, length, g.n - 2);
                out["free_lie_dim"] = oracle;
            }
            if (g.text())
                std::cout << dim << "\n";
            else
                emit_json(out);
        } else if (*dims_c) {
            if (flag_milnor) {
                if (r < 1) throw DomainError("dims --milnor needs --r >= 1");
                const MilnorDims d = milnor_dims(g.m, r);
                emit_json(Json{{"P", d.P}, {"M", d.M}});
            } else if (!leaves_text.empty()) {
                emit_json(Json{{"dim", tree_quotient(g.ctx(), parse_int_list(leaves_text)).dimension()}});
            } else if (gens > 0 && length > 0) {
                const int deg = lie_degree.empty() ? g.n - 2 : std::stoi(lie_degree);
                emit_json(Json{{"dim", free_lie_dimension(gens, length, deg)}});
            } else {
                throw DomainError("dims needs --milnor, --leaves, or --generators with --length");
            }
        } else if (*enum_c) {
            const Context ctx = g.ctx();
            if (p > 0) {
                const auto words = bar_basis(ctx, p, q, weight >= 0 ? std::optional<int>(weight) : std::nullopt);
                if (g.text()) {
                    for (const auto& w : words) std::cout << to_text(w) << "\n";
                } else {
                    Json arr = Json::array();
                    for (const auto& w : words) {
                        Json word = Json::array();
                        for (const auto& d : w) word.push_back(to_json(d));
                        arr.push_back(word);
                    }
                    emit_json(Json{{"count", words.size()}, {"words", arr}});
                }
            } else {
                if (edges < 0 || free_count < 0) throw DomainError("enumerate needs --edges and --free, or --p and --q");
                const auto ds = enumerate_diagrams(ctx, edges, free_count);
                if (g.text()) {
                    for (const auto& d : ds) std::cout << to_text(d) << "\n";
                } else {
                    Json arr = Json::array();
                    for (const auto& d : ds) arr.push_back(to_json(d));
                    emit_json(Json{{"count", ds.size()}, {"diagrams", arr}});
                }
            }
        } else if (*yb_c) {
            const Context ctx = g.ctx();
            bool all = true;
            Json arr = Json::array();
            for (const auto& s : yang_baxter_elements(g.m, g.n)) {
                const bool ok = is_exact(theta(s, ctx));
                all = all && ok;
                if (g.text())
                    std::cout << (ok ? "exact " : "NOT EXACT ") << s.label << "\n";
                else
                    arr.push_back(Json{{"relation", s.label}, {"implied", s.implied}, {"exact", ok}});
            }
            if (!g.text()) emit_json(Json{{"all_exact", all}, {"relations", arr}});
        } else if (*self_c) {
            return run_selftest(g, cases);
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
