// qpxval: exact chain-represented valuations on Q_p(X) from the command line.
// Exit codes: 0 success, 1 domain/scope error, 2 parse or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qpxval/abkp.hpp"
#include "qpxval/chain_io.hpp"
#include "qpxval/errors.hpp"
#include "qpxval/frame.hpp"
#include "qpxval/oracle.hpp"
#include "qpxval/valchain.hpp"

namespace {

using namespace qpxval;

struct ChainInput {
    std::string path;
    std::string inline_json;

    ValuationChain load() const {
        if (path.empty() == inline_json.empty())
            throw parse_error("provide exactly one of --chain <file> or --inline <json>");
        std::string text = inline_json;
        if (!path.empty()) {
            std::ifstream in(path);
            if (!in) throw parse_error("cannot read chain spec file '" + path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        return ValuationChain::from_spec(chain_spec_from_json(text));
    }
};

void add_chain_options(CLI::App* sub, ChainInput& in) {
    sub->add_option("--chain", in.path, "chain spec JSON file");
    sub->add_option("--inline", in.inline_json, "chain spec JSON given inline");
}

void emit(bool as_json, const nlohmann::json& j, const std::string& plain) {
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << plain << "\n";
}

std::string multiset_plain(const SlopeMultiset& s) { return s.to_string(); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic with chain-represented valuations on Q_p(X)"};
    app.require_subcommand(1);

    // shared state filled by the chosen subcommand's options
    ChainInput chain_in;
    bool as_json = false;
    std::string poly_s, q_s, f_s, g_s, value_s, target = "w";
    std::int64_t p = 0;
    long height = 9, ppow = 1, degree = 1, pairs = 200, max_deg = 6, fal_maxdeg = 0;
    unsigned long long seed = 0;
    long limit = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit JSON instead of plain text");
        return sub;
    };

    // eval
    {
        auto* sub = add_common(app.add_subcommand("eval", "w(f) under the chain"));
        add_chain_options(sub, chain_in);
        sub->add_option("--poly", poly_s, "polynomial in X")->required();
        sub->callback([&] {
            const ExtValue v = w_eval(chain_in.load(), poly_from_string(poly_s));
            emit(as_json, {{"value", v.to_string()}}, v.to_string());
        });
    }
    // epsilon
    {
        auto* sub = add_common(app.add_subcommand("epsilon", "epsilon(f) = max_b (w(f)-w(d_b f))/b"));
        add_chain_options(sub, chain_in);
        sub->add_option("--poly", poly_s, "polynomial in X")->required();
        sub->callback([&] {
            const ExtValue v = epsilon(chain_in.load(), poly_from_string(poly_s));
            emit(as_json, {{"epsilon", v.to_string()}}, v.to_string());
        });
    }
    // delta
    {
        auto* sub = add_common(app.add_subcommand("delta", "optimizing-root value delta(f) for monic f"));
        add_chain_options(sub, chain_in);
        sub->add_option("--poly", poly_s, "monic polynomial in X")->required();
        sub->callback([&] {
            const ExtValue v = delta_opt(chain_in.load(), poly_from_string(poly_s));
            emit(as_json, {{"delta", v.to_string()}}, v.to_string());
        });
    }
    // expand
    {
        auto* sub = add_common(app.add_subcommand("expand", "Q-expansion f = sum f_i Q^i"));
        sub->add_option("--poly", poly_s, "polynomial in X")->required();
        sub->add_option("--q", q_s, "monic base polynomial Q")->required();
        sub->callback([&] {
            const QExpansion ex = q_expansion(poly_from_string(poly_s), poly_from_string(q_s));
            nlohmann::json coeffs = nlohmann::json::array();
            std::string plain;
            for (size_t i = 0; i < ex.coeffs().size(); ++i) {
                coeffs.push_back(ex.coeff(i).to_string());
                if (i) plain += "\n";
                plain += "f_" + std::to_string(i) + ": " + ex.coeff(i).to_string();
            }
            emit(as_json, {{"base", ex.base().to_string()}, {"coeffs", coeffs}}, plain);
        });
    }
    // truncate
    {
        auto* sub = add_common(app.add_subcommand("truncate", "w_Q(f), the Q-truncation value"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "monic truncator Q")->required();
        sub->add_option("--poly", poly_s, "polynomial in X")->required();
        sub->callback([&] {
            const ExtValue v = truncation_eval({chain_in.load(), poly_from_string(q_s)},
                                               poly_from_string(poly_s));
            emit(as_json, {{"value", v.to_string()}}, v.to_string());
        });
    }
    // support
    {
        auto* sub = add_common(app.add_subcommand("support", "S_Q(f) and delta_Q(f)"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "monic truncator Q")->required();
        sub->add_option("--poly", poly_s, "nonzero polynomial in X")->required();
        sub->callback([&] {
            const SupportResult r = support_and_top({chain_in.load(), poly_from_string(q_s)},
                                                    poly_from_string(poly_s));
            std::string plain = "S = {";
            for (size_t i = 0; i < r.support.size(); ++i)
                plain += (i ? ", " : "") + std::to_string(r.support[i]);
            plain += "}, delta_Q = " + std::to_string(r.top);
            emit(as_json, {{"support", r.support}, {"delta_q", r.top}}, plain);
        });
    }
    // augment
    {
        auto* sub = add_common(app.add_subcommand("augment", "append (Q, gamma) to the chain"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "monic key polynomial of larger degree")->required();
        sub->add_option("--value", value_s, "assigned value, a rational a/b")->required();
        sub->callback([&] {
            const ValuationChain W2 =
                augment(chain_in.load(), poly_from_string(q_s), rat_from_string(value_s));
            const nlohmann::json j = chain_spec_to_json(W2.to_spec());
            emit(as_json, j, j.dump());
        });
    }
    // frame
    {
        auto* sub = add_common(app.add_subcommand("frame", "representation-theorem frame at a chain key"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "chain key polynomial")->required();
        sub->callback([&] {
            const RTFrame fr = build_frame(chain_in.load(), poly_from_string(q_s));
            const nlohmann::json j = frame_report_json(fr);
            std::string plain = "n = " + std::to_string(fr.n());
            plain += "\ngamma = " + rat_to_string(fr.gamma());
            plain += "\ne = " + std::to_string(fr.e());
            plain += "\nh = " + fr.h().to_string();
            plain += "\nresidue_field = " + fr.residue_field().to_string();
            emit(as_json, j, plain);
        });
    }
    // lift
    {
        auto* sub = add_common(app.add_subcommand("lift", "monic lifting of G(Y) != Y"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "chain key polynomial")->required();
        sub->add_option("--g", g_s, "monic residual polynomial in Y")->required();
        sub->callback([&] {
            const RTFrame fr = build_frame(chain_in.load(), poly_from_string(q_s));
            const Poly F = lift(fr, ResidualPoly::from_string(fr.residue_field(), g_s));
            emit(as_json, {{"lift", F.to_string()}}, F.to_string());
        });
    }
    // residual
    {
        auto* sub = add_common(app.add_subcommand("residual", "residual polynomial of F at a frame"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "chain key polynomial")->required();
        sub->add_option("--poly", poly_s, "monic F with deg F = e*m*n")->required();
        sub->callback([&] {
            const RTFrame fr = build_frame(chain_in.load(), poly_from_string(q_s));
            const ResidualPoly G = residual_polynomial(fr, poly_from_string(poly_s));
            emit(as_json, {{"residual", G.to_string()}}, G.to_string());
        });
    }
    // psi
    {
        auto* sub = add_common(app.add_subcommand("psi", "psi(Q)-membership of F"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "chain key polynomial")->required();
        sub->add_option("--poly", poly_s, "monic candidate F")->required();
        sub->callback([&] {
            const PsiVerdict v =
                psi_member(chain_in.load(), poly_from_string(q_s), poly_from_string(poly_s));
            std::string plain = std::string("member: ") + (v.member ? "true" : "false");
            plain += "\nw_Q(F) = " + v.wq_value.to_string();
            plain += "\nw(F) = " + v.w_value.to_string();
            if (v.degree_witness)
                plain += "\ndegree_witness = " + std::to_string(*v.degree_witness);
            emit(as_json, psi_verdict_json(v), plain);
        });
    }
    // alpha
    {
        auto* sub = add_common(app.add_subcommand("alpha", "alpha(Q) for a chain key"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "chain key polynomial")->required();
        sub->callback([&] {
            const auto a = alpha_invariant(chain_in.load(), poly_from_string(q_s));
            const std::string s = a ? std::to_string(*a) : "inf";
            emit(as_json, {{"alpha", a ? nlohmann::json(*a) : nlohmann::json("inf")}}, s);
        });
    }
    // distinguished
    {
        auto* sub = add_common(
            app.add_subcommand("distinguished", "is (F, Q) a distinguished pair (psi-side)"));
        add_chain_options(sub, chain_in);
        sub->add_option("--f", f_s, "monic abstract key polynomial F")->required();
        sub->add_option("--q", q_s, "chain key polynomial Q")->required();
        sub->callback([&] {
            const bool b =
                is_distinguished_pair(chain_in.load(), poly_from_string(f_s), poly_from_string(q_s));
            emit(as_json, {{"distinguished", b}}, b ? "true" : "false");
        });
    }
    // chain
    {
        auto* sub = add_common(app.add_subcommand("chain", "saturated distinguished chain certificate"));
        add_chain_options(sub, chain_in);
        sub->callback([&] {
            const ChainCertificate cert = saturated_chain(chain_in.load());
            std::string plain;
            for (size_t i = 0; i < cert.entries.size(); ++i) {
                const auto& en = cert.entries[i];
                plain += "Q_" + std::to_string(i) + " = " + en.key.to_string() + ", value " +
                         rat_to_string(en.value) + ", epsilon " + rat_to_string(en.epsilon) + "\n";
            }
            for (const auto& l : cert.links)
                plain += "(" + l.F.to_string() + ", " + l.Q.to_string() + "): " +
                         (l.distinguished ? "distinguished" : "NOT distinguished") + "\n";
            plain.pop_back();
            emit(as_json, certificate_json(cert), plain);
        });
    }
    // abkp-falsify
    {
        auto* sub = add_common(app.add_subcommand(
            "abkp-falsify", "search for a witness disproving that Q is an abstract key polynomial"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "monic candidate Q")->required();
        sub->add_option("--height", height, "coefficient height cap")->capture_default_str();
        sub->add_option("--ppow", ppow, "p-power exponent cap")->capture_default_str();
        sub->add_option("--max-degree", fal_maxdeg, "candidate degree cap (0: all below deg Q)")
            ->capture_default_str();
        sub->callback([&] {
            const auto w =
                falsify_abkp(chain_in.load(), poly_from_string(q_s), {height, ppow, fal_maxdeg});
            if (w)
                emit(as_json, {{"disproved", true}, {"witness", w->to_string()}},
                     "Disproved: " + w->to_string());
            else
                emit(as_json, {{"disproved", false}}, "NotDisproved");
        });
    }
    // np
    {
        auto* sub = add_common(app.add_subcommand("np", "Newton polygon root valuations"));
        sub->add_option("--poly", poly_s, "nonzero polynomial in X")->required();
        sub->add_option("--p", p, "prime")->required();
        sub->callback([&] {
            const SlopeMultiset s = newton_polygon(poly_from_string(poly_s), p);
            emit(as_json, slope_multiset_json(s), multiset_plain(s));
        });
    }
    // rootdiff
    {
        auto* sub = add_common(
            app.add_subcommand("rootdiff", "valuations of root differences of f and g"));
        sub->add_option("--f", f_s, "polynomial f")->required();
        sub->add_option("--g", g_s, "polynomial g")->required();
        sub->add_option("--p", p, "prime")->required();
        sub->callback([&] {
            const SlopeMultiset s =
                root_difference_valuations(poly_from_string(f_s), poly_from_string(g_s), p);
            if (s.zero_roots > 0) {
                SlopeMultiset off = s;
                off.zero_roots = 0;
                throw std::domain_error("shared root (" + std::to_string(s.zero_roots) +
                                        " coincident pairs); off-diagonal part: " +
                                        off.to_string());
            }
            emit(as_json, slope_multiset_json(s), multiset_plain(s));
        });
    }
    // axioms
    {
        auto* sub = add_common(app.add_subcommand(
            "axioms", "check the valuation axioms on random polynomial pairs"));
        add_chain_options(sub, chain_in);
        sub->add_option("--q", q_s, "check the Q-truncation instead of w itself");
        sub->add_option("--pairs", pairs, "number of random pairs")->capture_default_str();
        sub->add_option("--seed", seed, "RNG seed")->capture_default_str();
        sub->add_option("--deg", max_deg, "max degree of samples")->capture_default_str();
        sub->add_option("--height", height, "coefficient height of samples")->capture_default_str();
        sub->callback([&] {
            const ValuationChain W = chain_in.load();
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<long> deg(0, max_deg), c(-height, height), e(-1, 1);
            std::vector<std::pair<Poly, Poly>> samples;
            while (samples.size() < static_cast<size_t>(pairs)) {
                auto mk = [&] {
                    std::vector<BigRat> v(static_cast<size_t>(deg(rng)) + 1);
                    for (auto& x : v) x = BigRat(c(rng)) * pow_rat(W.p(), e(rng));
                    return Poly(std::move(v));
                };
                Poly f = mk(), g = mk();
                if (f.is_zero() || g.is_zero()) continue;
                samples.emplace_back(std::move(f), std::move(g));
            }
            AxiomReport rep;
            if (q_s.empty()) {
                rep = check_valuation_axioms([&](const Poly& f) { return w_eval(W, f); }, samples);
            } else {
                const TruncationHandle T{W, poly_from_string(q_s)};
                rep = check_valuation_axioms(
                    [&](const Poly& f) { return truncation_eval(T, f); }, samples);
            }
            std::string plain = "pairs checked: " + std::to_string(rep.pairs_checked);
            plain += "\nviolations: " + std::to_string(rep.violations.size());
            for (const auto& v : rep.violations)
                plain += "\nf = " + v.f.to_string() + ", g = " + v.g.to_string() + ": " + v.law;
            emit(as_json, axiom_report_json(rep), plain);
        });
    }
    // enum
    {
        auto* sub = add_common(app.add_subcommand(
            "enum", "deterministic stream of monic polynomials with bounded coefficients"));
        sub->add_option("--degree", degree, "degree of the polynomials")->required();
        sub->add_option("--height", height, "coefficient height cap")->capture_default_str();
        sub->add_option("--p", p, "prime")->required();
        sub->add_option("--ppow", ppow, "p-power exponent cap")->capture_default_str();
        sub->add_option("--limit", limit, "stop after this many (default: all)");
        sub->callback([&] {
            MonicEnumerator en(degree, height, p, ppow);
            nlohmann::json arr = nlohmann::json::array();
            long emitted = 0;
            std::string plain;
            while (auto f = en.next()) {
                if (limit >= 0 && emitted >= limit) break;
                if (as_json)
                    arr.push_back(f->to_string());
                else
                    plain += (emitted ? "\n" : "") + f->to_string();
                ++emitted;
            }
            emit(as_json, {{"count", emitted}, {"polynomials", arr}}, plain);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_scope& e) {
        std::cerr << "unsupported scope: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
