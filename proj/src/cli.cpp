#include "axtower/cli.hpp"

#include "axtower/apf.hpp"
#include "axtower/ax.hpp"
#include "axtower/cohomology.hpp"
#include "axtower/errors.hpp"
#include "axtower/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace axtower {

namespace {

using i64 = std::int64_t;

struct Printer {
    std::ostream& os;
    bool machine = false;

    void kv(const std::string& key, const std::string& value) const {
        os << key << (machine ? "=" : ": ") << value << "\n";
    }
    /// Bare value in human mode, key=value in machine mode.
    void result(const std::string& key, const std::string& value) const {
        if (machine) kv(key, value);
        else os << value << "\n";
    }
};

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Valuation& v) { return v.to_string(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(i64 v) { return std::to_string(v); }

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + str(xs[i]);
    return s;
}

std::string index_set_line(const IndexSet& s) {
    std::string line;
    for (const auto& [i, g] : s.pairs_r) line += "(" + std::to_string(i) + "," + std::to_string(g) + ") ";
    line += "|I_r|=" + std::to_string(s.pairs_r.size()) + " bound=" + to_string(s.bound) +
            (s.within_bound() ? " OK" : " EXCEEDED");
    return line;
}

TwistRelation need_relation(const TwistFile& t, const std::string& path) {
    if (!t.relation) throw ParseError(path + ": missing key \"relation\"");
    return *t.relation;
}

TwistSequence need_sequence(const std::optional<TwistSequence>& s, const std::string& path, const char* key) {
    if (!s) throw ParseError(path + ": missing key \"" + key + "\"");
    return *s;
}

void add_file(CLI::App* sub, std::string& path, const char* what = "input JSON file") {
    sub->add_option("file", path, what)->required()->check(CLI::ExistingFile);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kummer tower toolkit: Galois oscillation, ramification and H^1 digit extraction", "axtower"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "one key=value result per line");

    std::function<void(const Printer&)> action;
    std::string file;
    int m = 0, n = 1, count = -1, r_max = 2, s_max = -1, length = 5, n_max = 4, stage = -1;
    i64 p = 2;
    int e = 1, r = 1, deps_r_max = -1;

    auto* osc = app.add_subcommand("osc", "Galois oscillation of an element");
    add_file(osc, file);
    osc->callback([&] {
        action = [&](const Printer& pr) {
            auto rep = galois_oscillation(read_element(file));
            pr.result("oscillation", str(rep.oscillation));
            if (pr.machine) pr.kv("argmin", rep.argmin_index ? str(*rep.argmin_index) : "none");
        };
    });

    auto* approx = app.add_subcommand("approx", "best approximation in K_m and its defect");
    add_file(approx, file);
    approx->add_option("--m", m, "target level")->required()->check(CLI::NonNegativeNumber);
    approx->callback([&] {
        action = [&](const Printer& pr) {
            auto x = read_element(file);
            pr.kv("defect", str(approximation_defect(x, m)));
            pr.kv("approximant", element_to_json(best_approximant(x, m)));
        };
    });

    auto* ident = app.add_subcommand("identity", "oscillation against min over m of defect + 1/(p^m(p-1))");
    add_file(ident, file);
    ident->callback([&] {
        action = [&](const Printer& pr) {
            auto rep = oscillation_identity(read_element(file));
            pr.kv("lhs", str(rep.lhs));
            pr.kv("rhs", str(rep.rhs));
            pr.kv("holds", str(rep.holds()));
        };
    });

    auto* oracle = app.add_subcommand("oracle", "oscillation by exact norms over the cyclotomic composite");
    add_file(oracle, file);
    oracle->callback([&] {
        action = [&](const Printer& pr) { pr.result("oscillation", str(cyclotomic_oracle_oscillation(read_element(file)))); };
    });

    auto* constants = app.add_subcommand("constants", "optimal and original approximation constants");
    constants->add_option("--p", p, "prime")->required();
    constants->add_option("--m", m, "level")->check(CLI::NonNegativeNumber);
    constants->callback([&] {
        action = [&](const Printer& pr) {
            auto c = ax_constants(p, m);
            pr.kv("optimal", str(c.optimal));
            pr.kv("ax_original", str(c.ax_original));
        };
    });

    auto* apf = app.add_subcommand("apf", "ramification breaks, different and Herbrand integral");
    apf->add_option("--p", p, "prime")->required();
    apf->add_option("--e", e, "ramification index of K")->check(CLI::PositiveNumber);
    apf->add_option("--n", n, "tower level")->required()->check(CLI::NonNegativeNumber);
    apf->callback([&] {
        action = [&](const Printer& pr) {
            auto prof = ramification_profile(n, p, e);
            pr.kv("breaks", join(prof.breaks));
            pr.kv("degrees", join(prof.degrees));
            auto d = different_valuation(n, p, e);
            pr.kv("different_derivative", str(d.derivative));
            pr.kv("different_closed", str(d.closed_expression));
            auto h = herbrand_integral_check(n, p, e);
            pr.kv("integral", str(h.integral));
            pr.kv("integral_over_e", str(h.normalized));
            pr.kv("derivative_matches_integral", str(h.agree()));
            pr.kv("derivative_matches_closed", str(d.agree()));
            if (!d.agree())
                pr.kv("notice", "closed expression e(n+1)-e/p^n differs from the derivative value for e=" +
                                    std::to_string(e));
        };
    });

    auto* twist = app.add_subcommand("twist", "Frobenius-twisted linear recurrences");
    twist->require_subcommand(1);
    auto* tcheck = twist->add_subcommand("check", "does the relation hold on every window");
    add_file(tcheck, file, "twist file with field, sequence, relation");
    tcheck->callback([&] {
        action = [&](const Printer& pr) {
            auto t = read_twist_file(file);
            pr.result("holds", str(check_relation(need_sequence(t.sequence, file, "sequence"), need_relation(t, file))));
        };
    });
    auto* tfind = twist->add_subcommand("find", "smallest-order relation for a sequence");
    add_file(tfind, file, "twist file with field, sequence");
    tfind->add_option("--r-max", r_max, "largest order searched")->check(CLI::NonNegativeNumber);
    tfind->callback([&] {
        action = [&](const Printer& pr) {
            auto t = read_twist_file(file);
            auto rel = find_relation(t.field, need_sequence(t.sequence, file, "sequence"), r_max);
            pr.result("relation", rel ? rel->to_string() : "none");
        };
    });
    auto* tgen = twist->add_subcommand("gen", "extend a seed with a relation");
    add_file(tgen, file, "twist file with field, relation, seed");
    tgen->add_option("--count", count, "total length")->required()->check(CLI::NonNegativeNumber);
    tgen->callback([&] {
        action = [&](const Printer& pr) {
            auto t = read_twist_file(file);
            pr.result("sequence", sequence_to_string(extend_sequence(need_relation(t, file),
                                                                      need_sequence(t.seed, file, "seed"), count)));
        };
    });
    auto* tcount = twist->add_subcommand("count", "exhaustive number of solutions of a given length");
    add_file(tcount, file, "twist file with field, relation");
    tcount->add_option("--length", length, "sequence length")->check(CLI::NonNegativeNumber);
    tcount->callback([&] {
        action = [&](const Printer& pr) {
            auto t = read_twist_file(file);
            pr.result("count", std::to_string(solution_count(need_relation(t, file), length)));
        };
    });

    auto* coh = app.add_subcommand("coh", "invariant classes and their digits");
    coh->require_subcommand(1);
    auto* cval = coh->add_subcommand("validate", "check that an element is an invariant class");
    add_file(cval, file);
    cval->callback([&] {
        action = [&](const Printer& pr) {
            auto c = validate_invariant(read_element(file));
            pr.kv("validated", str(c.validated));
            pr.kv("oscillation", str(c.oscillation));
            pr.kv("valuation", str(c.normalized_valuation));
        };
    });
    auto* cpsi = coh->add_subcommand("psi", "digits x_m of the class on the η_m basis");
    add_file(cpsi, file);
    cpsi->add_option("--count", count, "number of digits (default: the level)");
    cpsi->callback([&] {
        action = [&](const Printer& pr) {
            auto c = validate_invariant(read_element(file));
            const int k = count < 0 ? c.rep.level() : count;
            if (c.rep.config()->e() == 1) {
                pr.result("digits", sequence_to_string(psi_digits(c, k)));
            } else {
                auto fam = psi_digit_families(c, k);
                for (std::size_t j = 0; j < fam.size(); ++j)
                    pr.kv("digits_j" + std::to_string(j + 1), sequence_to_string(fam[j]));
            }
        };
    });
    auto* ctor = coh->add_subcommand("torsion", "smallest n with π^n killing the class");
    add_file(ctor, file);
    ctor->callback([&] {
        action = [&](const Printer& pr) {
            auto t = torsion_check(validate_invariant(read_element(file)));
            pr.kv("n", std::to_string(t.n));
            pr.kv("bound", std::to_string(t.bound));
        };
    });
    auto* cxi = coh->add_subcommand("xiseq", "the sequence ξ_{s+1} = ξ_s^p - [t_s] η_0");
    add_file(cxi, file);
    cxi->add_option("--s-max", s_max, "last index (default: the level)");
    cxi->callback([&] {
        action = [&](const Printer& pr) {
            auto c = validate_invariant(read_element(file));
            const int top = s_max < 0 ? c.rep.level() : s_max;
            auto xs = xi_tower_sequence(c, top);
            for (std::size_t s = 0; s < xs.size(); ++s) {
                auto cs = validate_invariant(xs[s]);
                pr.kv("xi_" + std::to_string(s),
                      str(cs.normalized_valuation) + " " + sequence_to_string(psi_digits(cs, c.rep.level())));
            }
        };
    });
    auto* cdeps = coh->add_subcommand("deps", "twist relation from the K-linear dependence of the ξ_s");
    add_file(cdeps, file);
    cdeps->add_option("--s-max", s_max, "last ξ index (default: the level)");
    cdeps->add_option("--r-max", deps_r_max, "largest order searched (default: half the level)");
    cdeps->callback([&] {
        action = [&](const Printer& pr) {
            auto c = validate_invariant(read_element(file));
            auto xs = xi_tower_sequence(c, s_max < 0 ? c.rep.level() : s_max);
            pr.result("relation", find_K_linear_dependence(xs, deps_r_max).to_string());
        };
    });
    auto* cwit = coh->add_subcommand("witness", "additive witness polynomial for a relation and digits");
    add_file(cwit, file, "witness file with config, relation, digits");
    cwit->callback([&] {
        action = [&](const Printer& pr) {
            auto w = read_witness_file(file);
            auto P = build_witness_polynomial(w.config, w.relation, w.digits);
            pr.kv("order", std::to_string(P.relation.order()));
            std::vector<std::string> deg;
            for (int s = 0; s <= P.relation.order(); ++s) deg.push_back(std::to_string(ipow(w.config->p(), s)));
            pr.kv("degrees", "X^" + [&] {
                std::string j;
                for (std::size_t i = 0; i < deg.size(); ++i) j += (i ? ",X^" : "") + deg[i];
                return j;
            }());
            pr.kv("constant_valuation", str(P.constant.valuation()));
            pr.kv("constant", element_to_json(P.constant));
        };
    });
    auto* cdef = coh->add_subcommand("defect", "v(P(ξ_n)) and the stage Newton polygon for n = 1..n-max");
    add_file(cdef, file, "witness file with config, relation, digits");
    cdef->add_option("--n-max", n_max, "last stage")->check(CLI::PositiveNumber);
    cdef->callback([&] {
        action = [&](const Printer& pr) {
            auto w = read_witness_file(file);
            auto P = build_witness_polynomial(w.config, w.relation, w.digits);
            for (int k = 1; k <= n_max; ++k) {
                auto np = newton_polygon(stage_polynomial_valuations(P, k));
                pr.kv("defect_" + std::to_string(k), str(approximate_root_defect(P, k)));
                pr.kv("integral_root_" + std::to_string(k), str(has_integral_root(np)));
            }
        };
    });
    auto* cnewt = coh->add_subcommand("newton", "Newton polygon of a valuation file or of a stage polynomial");
    add_file(cnewt, file, "valuation file, or witness file with --stage");
    cnewt->add_option("--stage", stage, "read a witness file and use the stage-n polynomial");
    cnewt->callback([&] {
        action = [&](const Printer& pr) {
            std::map<i64, Valuation> vals;
            if (stage >= 1) {
                auto w = read_witness_file(file);
                vals = stage_polynomial_valuations(build_witness_polynomial(w.config, w.relation, w.digits), stage);
            } else {
                vals = read_valuation_file(file);
            }
            auto np = newton_polygon(vals);
            std::string segs;
            for (const auto& s : np.segments) segs += (segs.empty() ? "" : " ") + ("(" + str(s.slope) + "," + str(s.length) + ")");
            pr.kv("segments", segs);
            pr.kv("zero_roots", std::to_string(np.zero_roots));
            pr.kv("positive_root", str(has_positive_valuation_root(np)));
            pr.kv("integral_root", str(has_integral_root(np)));
        };
    });
    auto index_opts = [&](CLI::App* sub) {
        sub->add_option("--p", p, "prime")->required();
        sub->add_option("--e", e, "ramification index")->required()->check(CLI::PositiveNumber);
        sub->add_option("--r", r, "order")->required()->check(CLI::PositiveNumber);
        sub->callback([&] { action = [&](const Printer& pr) { pr.result("indices", index_set_line(index_sets(p, e, r))); }; });
    };
    index_opts(coh->add_subcommand("indices", "the index set I_r"));
    index_opts(app.add_subcommand("indices", "the index set I_r"));
    auto* csup = coh->add_subcommand("support", "β_{i,γ} with ξ = Σ β_{i,γ} η_i^γ");
    add_file(csup, file);
    csup->callback([&] {
        action = [&](const Printer& pr) {
            auto c = validate_invariant(read_element(file));
            auto sup = ramified_support(c);
            if (sup.empty()) pr.result("support", "empty");
            for (const auto& [key, beta] : sup) {
                const auto digits = teichmuller_expand(beta, beta.order(), beta.order() + 1);
                pr.kv("(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")",
                      str(beta.valuation()) + " " + digits.begin()->second.to_string());
            }
        };
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ParseError: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }

    std::ostringstream buf;
    try {
        action(Printer{buf, machine});
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        out << buf.str();
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        out << buf.str();
        err << "InternalError: " << e.what() << "\n";
        return 1;
    }
    out << buf.str();
    return 0;
}

}  // namespace axtower
