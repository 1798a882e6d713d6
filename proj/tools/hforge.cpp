// hforge: construct complex Hadamard matrices from combinatorial designs,
// verify them exactly, and separate equivalence classes via the Haagerup
// set and the minor-multiset fingerprint.

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "hforge/construct.hpp"
#include "hforge/json_io.hpp"

namespace {

using namespace hforge;

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("HFORGE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return omp_get_max_threads();
}

// "120s" = seconds, plain integer = minor count.
Budget parse_budget(const std::string& s) {
    Budget b;
    if (s.empty()) return b;
    if (s.back() == 's') {
        b.max_seconds = std::stod(s.substr(0, s.size() - 1));
    } else {
        b.max_minors = std::stoull(s);
    }
    return b;
}

Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus") return Sign::plus;
    if (s == "-" || s == "minus") return Sign::minus;
    throw CLI::ValidationError("--sign must be + or -");
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        save_json_file(out_path, j);
    }
}

void print_fingerprint_text(const Fingerprint& f, std::ostream& os) {
    os << "order " << f.n << "\n";
    for (const MinorSpectrum& s : f.spectra) {
        os << "d=" << s.d << ":";
        if (s.exact)
            for (const auto& [v, m] : s.pairs) os << " (" << render_sqrt(v) << ", " << m << ")";
        else
            for (const auto& [v, m] : s.fpairs) os << " (" << v << ", " << m << ")";
        os << "\n";
    }
}

Chm load_chm(const std::string& path) { return chm_from_json(load_json_file(path)); }

RealHadamard load_real_hadamard(const std::string& path) {
    RealHadamard h{intmat_from_json(load_json_file(path))};
    if (!verify_real_hadamard(h)) throw BadParameters(path + " is not a real Hadamard matrix");
    return h;
}

// Catalogue names -> matrices. Families beyond the fixed fixtures:
// F<n> (Fourier, float backend) and H<order> (stored real Hadamard).
json emit_catalogue_entry(const std::string& name) {
    for (const std::string& f : fixture_names())
        if (name == f) return chm_to_json(fixture(name));
    if (name.size() > 1 && name[0] == 'F') {
        int n = std::stoi(name.substr(1));
        return chm_to_json(fourier(n));
    }
    if (name.size() > 1 && name[0] == 'H') {
        int order = std::stoi(name.substr(1));
        return intmat_to_json(stored_real_hadamard(order).m);
    }
    if (name.rfind("paley", 0) == 0) {
        int q = std::stoi(name.substr(5));
        return intmat_to_json(paley_design(q).incidence);
    }
    throw UnknownFixture("no catalogue entry named " + name);
}

void print_catalogue(std::ostream& os) {
    os << "fixtures (entry-exact transcriptions):\n"
          "  P7    order 7,  b = -1/2 + i*sqrt(3)/2        (theorem3 --sylvester 3 --sign +)\n"
          "  U15   order 15, a = -7/8 + i*sqrt(15)/8       (theorem1 --sylvester 4 --sign +)\n"
          "  V15   order 15, b = -5/6 + i*sqrt(11)/6       (theorem3 --sylvester 4 --sign +)\n"
          "  W9A   order 9,  c = 1/4 + i*sqrt(15)/4        (theorem2 --q 9 --sign +)\n"
          "constructible families:\n"
          "  F_3, C_7A/C_7B, C_11A/C_11B   theorem1 --q 3|7|11 --sign +|-\n"
          "  U_15                          theorem1 --sylvester 4\n"
          "  P_7, V_15                     theorem3 --sylvester 3|4\n"
          "  W_9A/W_9B                     theorem2 --q 9 --sign +|-\n"
          "  W_13A/W_13B (float backend)   theorem2 --q 13 --sign +|-\n"
          "emittable with --emit NAME:\n"
          "  P7 U15 V15 W9A | F<n> (Fourier) | H2 H4 H8 H12 H16 (real Hadamard) | paley<q> (design)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hforge: complex Hadamard matrices from block designs, with exact\n"
        "verification and equivalence invariants (Haagerup set, minor\n"
        "fingerprint). Float-backend tolerance is 1e-9 (scaled by n for\n"
        "inner products); exact backend uses zero tolerance."};
    app.require_subcommand(1);

    std::string out_path, format = "text", budget_str, sign_str = "+";
    int workers = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "build a CHM from a design-type object");
    construct->require_subcommand(1);
    int q = 0, sylvester_t = 0;
    std::string design_path, conference_path, hadamard_path;

    auto add_common_construct = [&](CLI::App* c) {
        c->add_option("--sign", sign_str, "+ or - branch of the entry formula")->default_val("+");
        c->add_option("-o,--output", out_path, "output matrix JSON path");
    };
    auto* t1 = construct->add_subcommand("theorem1", "Hadamard design -> CHM of order 4m-1");
    t1->add_option("--q", q, "Paley design on GF(q), q = 3 mod 4");
    t1->add_option("--sylvester", sylvester_t, "core design of the Sylvester matrix of order 2^t");
    t1->add_option("--design", design_path, "0/1 incidence JSON file");
    add_common_construct(t1);
    auto* t2 = construct->add_subcommand("theorem2", "symmetric conference matrix -> CHM of order 4m+1");
    t2->add_option("--q", q, "Paley conference over GF(q), q = 1 mod 4");
    t2->add_option("--conference", conference_path, "conference matrix JSON file");
    add_common_construct(t2);
    auto* t3 = construct->add_subcommand("theorem3", "symmetric real Hadamard -> CHM of order 4m-1");
    t3->add_option("--sylvester", sylvester_t, "Sylvester matrix of order 2^t");
    t3->add_option("--hadamard", hadamard_path, "+-1 matrix JSON file");
    add_common_construct(t3);
    auto* ind = construct->add_subcommand("induce", "any feasible 2-design -> two-entry CHM");
    ind->add_option("--design", design_path, "0/1 incidence JSON file")->required();
    add_common_construct(ind);

    // verify
    auto* verify = app.add_subcommand("verify", "check unimodularity and H H* = n I");
    std::string verify_path;
    verify->add_option("matrix", verify_path, "matrix JSON file")->required();
    verify->add_option("--format", format, "text or json");

    // invariant
    auto* invariant = app.add_subcommand("invariant", "compute an equivalence invariant");
    invariant->require_subcommand(1);
    std::string inv_path;
    int dmax = -1;
    auto* haag = invariant->add_subcommand("haagerup", "the quadruple-product set");
    haag->add_option("matrix", inv_path, "matrix JSON file")->required();
    haag->add_option("--format", format, "text or json");
    haag->add_option("-o,--output", out_path, "output JSON path");
    auto* fing = invariant->add_subcommand("fingerprint", "minor multisets for d = 2..dmax");
    fing->add_option("matrix", inv_path, "matrix JSON file")->required();
    fing->add_option("--dmax", dmax, "largest minor size (default min(n/2, 5))");
    fing->add_option("--budget", budget_str, "minor count, or seconds with 's' suffix");
    fing->add_option("--workers", workers, "worker threads (default: HFORGE_WORKERS or all cores)");
    fing->add_option("--format", format, "text or json");
    fing->add_option("-o,--output", out_path, "output JSON path");

    // compare
    auto* compare = app.add_subcommand("compare", "certify inequivalence of two matrices");
    std::string path_a, path_b;
    compare->add_option("first", path_a, "matrix JSON file")->required();
    compare->add_option("second", path_b, "matrix JSON file")->required();
    compare->add_option("--dmax", dmax, "fingerprint depth (default min(n/2, 5))");
    compare->add_option("--budget", budget_str, "minor count, or seconds with 's' suffix");
    compare->add_option("--workers", workers, "worker threads");
    compare->add_option("--format", format, "text or json");
    compare->add_option("-o,--output", out_path, "output JSON path");

    // census
    auto* census = app.add_subcommand("census", "sampled |minor| histogram of a real Hadamard matrix");
    std::string census_path;
    std::uint64_t census_count = 100000, census_seed = 1;
    int census_d = 0;
    census->add_option("--matrix", census_path, "+-1 matrix JSON file")->required();
    census->add_option("--d", census_d, "minor size")->required();
    census->add_option("--count", census_count, "sample count (covers all pairs -> exhaustive)");
    census->add_option("--seed", census_seed, "stream seed");
    census->add_option("--workers", workers, "worker threads");
    census->add_option("-o,--output", out_path, "output JSON path");

    // duality
    auto* duality = app.add_subcommand("duality", "check the d vs n-d minor spectrum pairing");
    std::string duality_path;
    int duality_d = 0;
    duality->add_option("matrix", duality_path, "matrix JSON file")->required();
    duality->add_option("--d", duality_d, "minor size")->required();
    duality->add_option("--budget", budget_str, "minor count, or seconds with 's' suffix");
    duality->add_option("--workers", workers, "worker threads");
    duality->add_option("--format", format, "text or json");

    // catalogue
    auto* catalogue = app.add_subcommand("catalogue", "list or emit built-in matrices");
    std::string emit_name;
    catalogue->add_option("--emit", emit_name, "name to emit (see listing)");
    catalogue->add_option("-o,--output", out_path, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        omp_set_num_threads(resolve_workers(workers));
        Budget budget = parse_budget(budget_str);

        if (construct->parsed()) {
            Chm h = [&]() -> Chm {
                Sign sign = parse_sign(sign_str);
                if (t1->parsed()) {
                    BlockDesign b = q            ? paley_design(q)
                                    : sylvester_t ? hadamard_core_design(sylvester_hadamard(sylvester_t))
                                                  : require_2design(intmat_from_json(load_json_file(design_path)));
                    const int m = (b.v + 1) / 4;
                    if (b.v != 4 * m - 1 || b.k != 2 * m - 1 || b.lambda != m - 1)
                        throw BadParameters("theorem1 needs a Hadamard design 2-(4m-1,2m-1,m-1)");
                    return induce_from_design(b, sign);
                }
                if (t2->parsed()) {
                    ConferenceMatrixReal c = q ? paley_conference(q)
                                               : ConferenceMatrixReal{intmat_from_json(load_json_file(conference_path))};
                    return conference_to_chm(c, sign);
                }
                if (t3->parsed()) {
                    RealHadamard h = sylvester_t ? sylvester_hadamard(sylvester_t)
                                                 : RealHadamard{intmat_from_json(load_json_file(hadamard_path))};
                    return sym_hadamard_to_chm(h, sign);
                }
                return induce_from_design(require_2design(intmat_from_json(load_json_file(design_path))), sign);
            }();
            emit(chm_to_json(h), out_path);
            return 0;
        }

        if (verify->parsed()) {
            Chm h = load_chm(verify_path);
            ChmViolation r = verify_chm(h);
            if (format == "json") {
                std::cout << json{{"ok", r.ok}, {"what", r.what}, {"row_i", r.row_i},
                                  {"row_j", r.row_j}, {"deviation", r.deviation}}
                                 .dump(2)
                          << "\n";
            } else if (r.ok) {
                std::cout << "ok: order " << h.n() << " "
                          << (h.exact() ? "exact" : "float") << " CHM\n";
            } else {
                std::cout << "violation: " << r.what << " (rows " << r.row_i << "," << r.row_j
                          << ", deviation " << r.deviation << ")\n";
            }
            return r.ok ? 0 : 1;
        }

        if (haag->parsed()) {
            HaagerupSet s = haagerup_set(load_chm(inv_path));
            if (format == "json" || !out_path.empty()) emit(haagerup_to_json(s), out_path);
            else if (s.exact) {
                std::cout << s.values.size() << " values:\n";
                for (const QuadExt& z : s.values) std::cout << "  " << to_string(z) << "\n";
            } else {
                std::cout << s.fvalues.size() << " values (clustered):\n";
                for (const ComplexFloat& z : s.fvalues)
                    std::cout << "  " << z.real() << (z.imag() < 0 ? " - " : " + ")
                              << std::abs(z.imag()) << "i\n";
            }
            return 0;
        }

        if (fing->parsed()) {
            Fingerprint f = fingerprint(load_chm(inv_path), dmax, budget);
            if (format == "json" || !out_path.empty()) emit(fingerprint_to_json(f), out_path);
            else print_fingerprint_text(f, std::cout);
            return 0;
        }

        if (compare->parsed()) {
            Chm a = load_chm(path_a), b = load_chm(path_b);
            if (a.n() != b.n()) throw BadParameters("compare needs matrices of the same order");
            CertifyOutcome o = certify_inequivalent(a, b, dmax < 0 ? default_dmax(a.n()) : dmax, budget);
            if (format == "json" || !out_path.empty()) emit(certify_to_json(o), out_path);
            else if (!o.decided) std::cout << "undecided (invariants agree up to the checked depth)\n";
            else std::cout << "inequivalent: " << certificate_to_json(o.cert).dump() << "\n";
            return 0;
        }

        if (census->parsed()) {
            CensusResult c = sample_minor_census(load_real_hadamard(census_path), census_d,
                                                 census_count, census_seed);
            emit(census_to_json(c), out_path);
            return 0;
        }

        if (duality->parsed()) {
            DualityReport r = duality_check(load_chm(duality_path), duality_d, budget);
            if (format == "json")
                std::cout << json{{"ok", r.ok}, {"d", r.d}, {"detail", r.detail}}.dump(2) << "\n";
            else
                std::cout << (r.ok ? "duality holds for d=" + std::to_string(r.d)
                                   : "DUALITY VIOLATION (engine bug): " + r.detail)
                          << "\n";
            return r.ok ? 0 : 1;
        }

        if (catalogue->parsed()) {
            if (emit_name.empty()) print_catalogue(std::cout);
            else emit(emit_catalogue_entry(emit_name), out_path);
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (" << e.completed << "/" << e.total
                  << " minors done)\n";
        return 1;
    } catch (const UnknownFixture& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
