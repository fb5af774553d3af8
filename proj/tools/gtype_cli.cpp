// gtype — exact-arithmetic toolkit for group-type tests and torsion
// classification of rational elliptic curves over the A4-flavored infinite
// extensions.
//
// Subcommands:
//   group-check   decide weak/strong/generalized-type questions for a group
//   torsion       classify a curve's torsion over A4inf / QA4 / C3inf
//   fetch         resolve a curve label (fixtures, cache, remote database)
//   families      export the parameterization catalog as JSON
//   verify        run the verification battery
//
// Exit codes: 0 ok, 1 check failure, 2 input error, 3 network error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtype/classify.hpp"
#include "gtype/curvedb.hpp"
#include "gtype/gl2.hpp"
#include "gtype/gtypes.hpp"
#include "gtype/serialize.hpp"
#include "gtype/smallgroups.hpp"
#include "gtype/verify.hpp"

using namespace gtype;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNetworkError = 3;

// cycles like "(1 2 3),(1 2)(3 4)"; points are 1-based
FiniteGroup parse_perm_group(const std::string& text) {
    std::vector<std::vector<std::vector<int>>> gens_cycles;
    std::vector<std::vector<int>> current;
    std::vector<int> cycle;
    int maxpt = 0;
    size_t i = 0;
    auto flush_gen = [&]() {
        if (!current.empty()) gens_cycles.push_back(current);
        current.clear();
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '(') {
            cycle.clear();
            ++i;
            while (i < text.size() && text[i] != ')') {
                while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
                if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    int v = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        v = v * 10 + (text[i++] - '0');
                    if (v < 1) throw std::invalid_argument("permutation points are 1-based");
                    cycle.push_back(v);
                    maxpt = std::max(maxpt, v);
                } else if (i < text.size() && text[i] != ')') {
                    throw std::invalid_argument(std::string("unexpected character '") + text[i] +
                                                "' in permutation");
                }
            }
            if (i >= text.size()) throw std::invalid_argument("unbalanced '(' in permutation");
            ++i; // ')'
            if (cycle.size() > 1) current.push_back(cycle);
        } else if (c == ',') {
            flush_gen();
            ++i;
        } else if (c == ' ') {
            ++i;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in permutation");
        }
    }
    flush_gen();
    if (maxpt == 0) throw std::invalid_argument("no permutation cycles given");

    auto carrier = std::make_shared<PermCarrier>(maxpt);
    std::vector<Elem> gens;
    for (const auto& cycles : gens_cycles) {
        Elem g = carrier->identity();
        for (const auto& cyc : cycles)
            for (size_t k = 0; k < cyc.size(); ++k)
                g[cyc[k] - 1] = static_cast<int32_t>(cyc[(k + 1) % cyc.size()] - 1);
        gens.push_back(std::move(g));
    }
    return closure(carrier, gens);
}

FiniteGroup parse_matrix_group(const std::string& text) {
    // semicolon-separated matrices, all "[[a,b],[c,d]] mod n"
    std::vector<Elem> gens;
    int64_t modulus = 0;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto [m, n] = parse_mat2(part);
        if (modulus == 0) modulus = n;
        if (n != modulus) throw std::invalid_argument("matrix generators must share one modulus");
        gens.push_back(m);
    }
    if (gens.empty()) throw std::invalid_argument("no matrices given");
    return closure(std::make_shared<MatCarrier>(modulus), gens);
}

std::vector<Rational> parse_coeff_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(Rational::from_string(part));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit: group types and torsion over infinite extensions"};
    app.require_subcommand(1);

    // ---- group-check ----
    auto* gc = app.add_subcommand("group-check", "run a type test on a finite group");
    std::string gc_perm, gc_mat, gc_test, gc_relation;
    int64_t gc_cyclic = 0;
    std::vector<int64_t> gc_dpq, gc_weak, gc_strong;
    gc->add_option("--perm", gc_perm, "generators as permutation cycles, e.g. \"(1 2 3),(1 2)(3 4)\"");
    gc->add_option("--cyclic", gc_cyclic, "cyclic group of this order");
    gc->add_option("--dpq", gc_dpq, "the semidirect product D_{p,q}")->expected(2);
    gc->add_option("--mat", gc_mat, "matrix generators \"[[a,b],[c,d]] mod n;...\"");
    gc->add_option("--test", gc_test, "genA4 | weak-dpq | strong-dpq | relation")->required();
    gc->add_option("--args", gc_weak, "p q for weak-dpq/strong-dpq")->expected(2);
    gc->add_option("--relation", gc_relation, "word for the relation test, e.g. \"x1^4\"");

    // ---- torsion ----
    auto* ts = app.add_subcommand("torsion", "classify torsion over a chosen field");
    std::string ts_coeffs, ts_label, ts_batch, ts_field = "A4inf";
    bool ts_trace = false;
    ts->add_option("--coeffs", ts_coeffs, "a1,a2,a3,a4,a6  (exact rationals)");
    ts->add_option("--label", ts_label, "curve label resolved via fixtures/cache/remote");
    ts->add_option("--batch", ts_batch, "JSON file with an array of coefficient arrays");
    ts->add_option("--field", ts_field, "A4inf | QA4 | C3inf");
    ts->add_flag("--trace", ts_trace, "include the rule trace");

    // ---- fetch ----
    auto* ft = app.add_subcommand("fetch", "resolve a curve label");
    std::string ft_label;
    ft->add_option("--label", ft_label)->required();

    // ---- families ----
    auto* fm = app.add_subcommand("families", "export the parameterization catalog");

    // ---- verify ----
    auto* vf = app.add_subcommand("verify", "run the verification battery");
    std::string vf_suite, vf_id;
    uint64_t vf_seed = 20260808;
    bool vf_serial = false;
    vf->add_option("--suite", vf_suite, "gtype | gl2 | families | classify");
    vf->add_option("--only", vf_id, "run a single check by id (C1..C13)");
    vf->add_option("--seed", vf_seed, "seed for the randomized suites");
    vf->add_flag("--serial", vf_serial, "disable the parallel kernels");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gc) {
            FiniteGroup g;
            if (!gc_perm.empty()) g = parse_perm_group(gc_perm);
            else if (gc_cyclic > 0) g = cyclic_group(static_cast<size_t>(gc_cyclic));
            else if (gc_dpq.size() == 2) g = build_dpq(gc_dpq[0], gc_dpq[1]);
            else if (!gc_mat.empty()) g = parse_matrix_group(gc_mat);
            else {
                std::cerr << "group-check: give one of --perm/--cyclic/--dpq/--mat\n";
                return kExitInputError;
            }
            nlohmann::ordered_json out;
            out["group"] = g.to_json();
            if (gc_test == "genA4") {
                bool verdict = is_generalized_a4_type(g);
                out["test"] = "genA4";
                out["verdict"] = verdict;
                if (!verdict) {
                    // witness: a nontrivial element of lambda_2(lambda_3(G))
                    FiniteGroup l = lambda_subgroup(lambda_subgroup(g, 3), 2);
                    for (const Elem& e : l.elements)
                        if (e != g.carrier->identity()) { out["witness"] = e; break; }
                }
            } else if (gc_test == "weak-dpq" || gc_test == "strong-dpq") {
                if (gc_weak.size() != 2) {
                    std::cerr << "group-check: --args p q required for " << gc_test << "\n";
                    return kExitInputError;
                }
                bool verdict = gc_test == "weak-dpq"
                                   ? is_weak_dpq_type(g, gc_weak[0], gc_weak[1])
                                   : is_strong_dpq_type(g, gc_weak[0], gc_weak[1]);
                out["test"] = gc_test;
                out["p"] = gc_weak[0];
                out["q"] = gc_weak[1];
                out["verdict"] = verdict;
            } else if (gc_test == "relation") {
                if (gc_relation.empty()) {
                    std::cerr << "group-check: --relation required\n";
                    return kExitInputError;
                }
                FreeWord w = FreeWord::parse(gc_relation);
                std::vector<Elem> witness;
                bool verdict = satisfies_relation(g, w, false, &witness);
                out["test"] = "relation";
                out["word"] = w.str();
                out["verdict"] = verdict;
                if (!verdict) out["witness"] = witness;
            } else {
                std::cerr << "group-check: unknown test " << gc_test << "\n";
                return kExitInputError;
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (*ts) {
            Field f;
            if (ts_field == "A4inf") f = Field::A4inf;
            else if (ts_field == "QA4") f = Field::QA4;
            else if (ts_field == "C3inf") f = Field::C3inf;
            else {
                std::cerr << "torsion: unknown field " << ts_field << "\n";
                return kExitInputError;
            }

            if (!ts_batch.empty()) {
                // batch mode: classify an array of curves concurrently, with
                // per-item isolation
                std::ifstream in(ts_batch);
                if (!in) {
                    std::cerr << "torsion: cannot open " << ts_batch << "\n";
                    return kExitInputError;
                }
                nlohmann::json doc = nlohmann::json::parse(in);
                std::vector<nlohmann::ordered_json> results(doc.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
                for (int64_t i = 0; i < static_cast<int64_t>(doc.size()); ++i) {
                    try {
                        ClassificationReport rep = classify(curve_from_json(doc[i]), f);
                        results[i] = rep.to_json();
                        if (!ts_trace) results[i].erase("trace");
                    } catch (const std::exception& ex) {
                        results[i] = nlohmann::ordered_json{{"error", ex.what()}};
                    }
                }
                nlohmann::ordered_json out = nlohmann::ordered_json::array();
                for (auto& r : results) out.push_back(std::move(r));
                std::cout << out.dump(2) << "\n";
                return kExitOk;
            }

            EllipticCurve e;
            if (!ts_coeffs.empty()) {
                e = curve_from_coeffs(parse_coeff_list(ts_coeffs));
            } else if (!ts_label.empty()) {
                CurveDb db(CurveDb::from_env());
                e = db.fetch(ts_label).curve();
            } else {
                // read a JSON coefficient array from stdin
                nlohmann::json doc;
                std::cin >> doc;
                e = curve_from_json(doc);
            }
            ClassificationReport rep = classify(e, f);
            nlohmann::ordered_json out = rep.to_json();
            if (!ts_trace) out.erase("trace");
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (*ft) {
            CurveDb db(CurveDb::from_env());
            std::cout << db.fetch(ft_label).to_json().dump(2) << "\n";
            return kExitOk;
        }

        if (*fm) {
            std::cout << families_catalog_json().dump(2) << "\n";
            return kExitOk;
        }

        if (*vf) {
            VerifyOptions opts;
            opts.seed = vf_seed;
            opts.parallel = !vf_serial;
            auto outcomes = run_battery(opts, vf_suite, vf_id);
            if (outcomes.empty()) {
                std::cerr << "verify: no checks match the filter\n";
                return kExitInputError;
            }
            bool all = true;
            for (const auto& o : outcomes) {
                std::printf("[%s] %s %s (%s) — %s  [%.2f s]\n", o.pass ? "PASS" : "FAIL",
                            o.id.c_str(), o.label.c_str(), o.cite.c_str(), o.detail.c_str(),
                            o.seconds);
                all = all && o.pass;
            }
            nlohmann::ordered_json summary;
            summary["checks"] = outcomes.size();
            summary["failures"] = std::count_if(outcomes.begin(), outcomes.end(),
                                                [](const auto& o) { return !o.pass; });
            std::cout << summary.dump() << "\n";
            return all ? kExitOk : kExitCheckFailure;
        }
    } catch (const NetworkError& e) {
        std::cerr << "network error: " << e.what() << "\n";
        return kExitNetworkError;
    } catch (const LabelSyntaxError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const UnknownLabelError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitInputError;
}
