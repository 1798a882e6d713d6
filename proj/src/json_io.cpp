#include "hforge/json_io.hpp"

#include <fstream>

namespace hforge {

json scalar_to_json(const QuadExt& z) {
    return json{{"x", rational_to_string(z.x())},
                {"y", rational_to_string(z.y())},
                {"d", z.d()}};
}

QuadExt scalar_from_json(const json& j) {
    Rational x = rational_from_string(j.at("x").get<std::string>());
    Rational y = rational_from_string(j.at("y").get<std::string>());
    std::int64_t d = j.value("d", 1);
    return normalize_radicand(std::move(x), std::move(y), d);
}

json chm_to_json(const Chm& h) {
    json j;
    j["n"] = h.n();
    if (h.exact()) {
        j["backend"] = "exact";
        j["d"] = h.radicand();
        json rows = json::array();
        for (int i = 0; i < h.n(); ++i) {
            json row = json::array();
            for (int c = 0; c < h.n(); ++c) {
                const QuadExt& z = h.xat(i, c);
                row.push_back(json{{"x", rational_to_string(z.x())}, {"y", rational_to_string(z.y())}});
            }
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
        return j;
    }
    j["backend"] = "float";
    json rows = json::array();
    for (int i = 0; i < h.n(); ++i) {
        json row = json::array();
        for (int c = 0; c < h.n(); ++c) {
            ComplexFloat z = h.fat(i, c);
            row.push_back(json{{"re", z.real()}, {"im", z.imag()}});
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Chm chm_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const std::string backend = j.at("backend").get<std::string>();
    const json& rows = j.at("entries");
    if (rows.size() != static_cast<size_t>(n)) throw Error("entry rows do not match order");
    if (backend == "exact") {
        const std::int64_t d = j.value("d", 1);
        std::vector<QuadExt> e;
        e.reserve(static_cast<size_t>(n) * n);
        for (const json& row : rows) {
            if (row.size() != static_cast<size_t>(n)) throw Error("entry row length mismatch");
            for (const json& cell : row) {
                Rational x = rational_from_string(cell.at("x").get<std::string>());
                Rational y = rational_from_string(cell.at("y").get<std::string>());
                e.push_back(normalize_radicand(std::move(x), std::move(y), d));
            }
        }
        return Chm::exact_matrix(n, std::move(e));
    }
    if (backend == "float") {
        std::vector<ComplexFloat> e;
        e.reserve(static_cast<size_t>(n) * n);
        for (const json& row : rows) {
            if (row.size() != static_cast<size_t>(n)) throw Error("entry row length mismatch");
            for (const json& cell : row)
                e.emplace_back(cell.at("re").get<double>(), cell.at("im").get<double>());
        }
        return Chm::float_matrix(n, std::move(e));
    }
    throw Error("unknown backend: " + backend);
}

json intmat_to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int c = 0; c < m.n; ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    return json{{"order", m.n}, {"rows", std::move(rows)}};
}

IntMat intmat_from_json(const json& j) {
    const int n = j.at("order").get<int>();
    IntMat m(n);
    const json& rows = j.at("rows");
    if (rows.size() != static_cast<size_t>(n)) throw Error("row count does not match order");
    for (int i = 0; i < n; ++i) {
        if (rows[i].size() != static_cast<size_t>(n)) throw Error("row length does not match order");
        for (int c = 0; c < n; ++c) m.at(i, c) = rows[i][c].get<int>();
    }
    return m;
}

namespace {

json spectrum_to_json(const MinorSpectrum& s) {
    json pairs = json::array();
    if (s.exact) {
        for (const auto& [v, m] : s.pairs)
            pairs.push_back(json{{"value_sq", rational_to_string(v)}, {"mult", m}});
    } else {
        for (const auto& [v, m] : s.fpairs) pairs.push_back(json{{"value", v}, {"mult", m}});
    }
    return json{{"d", s.d}, {"pairs", std::move(pairs)}};
}

} // namespace

json fingerprint_to_json(const Fingerprint& f) {
    json spectra = json::array();
    for (const MinorSpectrum& s : f.spectra) spectra.push_back(spectrum_to_json(s));
    return json{{"n", f.n}, {"spectra", std::move(spectra)}};
}

json haagerup_to_json(const HaagerupSet& s) {
    json values = json::array();
    if (s.exact) {
        for (const QuadExt& z : s.values) {
            json v = scalar_to_json(z);
            v["str"] = to_string(z);
            values.push_back(std::move(v));
        }
        return json{{"backend", "exact"}, {"values", std::move(values)}};
    }
    for (const ComplexFloat& z : s.fvalues) values.push_back(json{{"re", z.real()}, {"im", z.imag()}});
    return json{{"backend", "float"}, {"values", std::move(values)}};
}

json census_to_json(const CensusResult& c) {
    json hist = json::object();
    for (const auto& [v, count] : c.histogram) hist[v.get_str()] = count;
    return json{{"d", c.d},
                {"seed", c.seed},
                {"count", c.count},
                {"exhaustive", c.exhaustive},
                {"histogram", std::move(hist)}};
}

json certificate_to_json(const InequivalenceCertificate& c) {
    json j;
    j["kind"] = (c.kind == InequivalenceCertificate::haagerup) ? "haagerup" : "fingerprint";
    j["direction"] = c.direction;
    j["numeric"] = c.numeric;
    if (c.kind == InequivalenceCertificate::haagerup) {
        if (c.numeric) {
            j["witness"] = json{{"re", c.witness_f.real()}, {"im", c.witness_f.imag()}};
        } else {
            j["witness"] = scalar_to_json(c.witness);
            j["witness_str"] = to_string(c.witness);
        }
        return j;
    }
    j["d"] = c.d;
    if (c.numeric) j["value"] = c.value_f;
    else {
        j["value_sq"] = rational_to_string(c.value_sq);
        j["value_str"] = render_sqrt(c.value_sq);
    }
    j["mult_first"] = c.mult_first;
    j["mult_second"] = c.mult_second;
    return j;
}

json compare_to_json(const CompareOutcome& o) {
    if (o.equal)
        return json{{"result", o.numeric ? "numerically-equal" : "equal"}, {"numeric", o.numeric}};
    return json{{"result", "certificate"}, {"numeric", o.numeric},
                {"certificate", certificate_to_json(o.cert)}};
}

json certify_to_json(const CertifyOutcome& o) {
    if (!o.decided) return json{{"result", "undecided"}, {"numeric", o.numeric}};
    return json{{"result", "certificate"}, {"numeric", o.numeric},
                {"certificate", certificate_to_json(o.cert)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace hforge
