#include "delone/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace delone::io {

using nlohmann::json;

namespace {

std::string vec_json(std::span<const double> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += g17(v[i]);
    }
    return s + "]";
}

std::string vecs_json(const std::vector<Vec>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += vec_json(vs[i]);
    }
    return s + "]";
}

std::string matrix_json(const Matrix& m) { return vecs_json(m); }

Vec vec_from(const json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(x.get<double>());
    return v;
}

Matrix matrix_from(const json& j) {
    Matrix m;
    for (const auto& row : j) m.push_back(vec_from(row));
    return m;
}

Region region_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ball") return Region::ball(vec_from(j.at("center")), j.at("radius").get<double>());
    if (kind == "box") return Region::box(vec_from(j.at("lo")), vec_from(j.at("hi")));
    throw std::invalid_argument("region: unknown kind '" + kind + "'");
}

Generator generator_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "crystal") {
        std::vector<Vec> offsets;
        if (j.contains("offsets")) offsets = matrix_from(j.at("offsets"));
        return Generator::crystal(matrix_from(j.at("basis")), std::move(offsets));
    }
    if (kind == "beatty")
        return Generator::beatty(j.at("alpha").get<double>(), j.at("delta").get<double>());
    if (kind == "fibonacci") return Generator::fibonacci();
    if (kind == "product")
        return Generator::product(generator_from(j.at("factor")), j.at("eta").get<double>(),
                                  j.at("dim").get<int>());
    if (kind == "cut_project")
        return Generator::cut_project(matrix_from(j.at("basis")), vec_from(j.at("phi")),
                                      vec_from(j.at("delta_vec")));
    if (kind == "perturbed")
        return Generator::perturbed(generator_from(j.at("base")), vec_from(j.at("target")),
                                    vec_from(j.at("displacement")));
    throw std::invalid_argument("generator: unknown kind '" + kind + "'");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string region_to_json(const Region& region) {
    if (region.kind() == Region::Kind::Ball)
        return "{\"kind\":\"ball\",\"center\":" + vec_json(region.center()) +
               ",\"radius\":" + g17(region.radius()) + "}";
    return "{\"kind\":\"box\",\"lo\":" + vec_json(region.lo()) +
           ",\"hi\":" + vec_json(region.hi()) + "}";
}

Region region_from_json_text(const std::string& text) { return region_from(json::parse(text)); }

std::string sample_to_json(const PointSample& sample) {
    std::string s = "{\"dim\":" + std::to_string(sample.dim) + ",\"tol\":" + g17(sample.tol) +
                    ",\"window\":" + region_to_json(sample.window) + ",\"source\":\"" +
                    sample.source + "\",\"points\":[";
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (i) s += ",";
        s += vec_json(sample.point(i));
    }
    return s + "]}";
}

PointSample sample_from_json(const std::string& text) {
    const json j = json::parse(text);
    PointSample s;
    s.dim = j.at("dim").get<int>();
    s.tol = j.at("tol").get<double>();
    s.window = region_from(j.at("window"));
    if (j.contains("source")) s.source = j.at("source").get<std::string>();
    for (const auto& p : j.at("points")) {
        if (static_cast<int>(p.size()) != s.dim)
            throw std::invalid_argument("sample: point dimension mismatch");
        for (const auto& x : p) s.coords.push_back(x.get<double>());
    }
    return s;
}

std::string sample_to_csv(const PointSample& sample) {
    std::string s;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto p = sample.point(i);
        for (int d = 0; d < sample.dim; ++d) {
            if (d) s += ",";
            s += g17(p[d]);
        }
        s += "\n";
    }
    return s;
}

PointSample sample_from_csv(const std::string& text) {
    PointSample s;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (s.dim == 0) s.dim = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != s.dim)
            throw std::invalid_argument("csv: ragged row");
        s.coords.insert(s.coords.end(), row.begin(), row.end());
    }
    if (s.dim == 0) throw std::invalid_argument("csv: no points");
    Vec lo(s.dim, std::numeric_limits<double>::infinity());
    Vec hi(s.dim, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int d = 0; d < s.dim; ++d) {
            lo[d] = std::min(lo[d], s.coords[i * s.dim + d]);
            hi[d] = std::max(hi[d], s.coords[i * s.dim + d]);
        }
    for (int d = 0; d < s.dim; ++d) {
        const double pad = std::max(1e-9, 1e-12 * std::abs(hi[d] - lo[d]));
        lo[d] -= pad;
        hi[d] += pad;
    }
    s.window = Region::box(std::move(lo), std::move(hi));
    s.source = "csv";
    return s;
}

std::string generator_to_json(const Generator& gen) {
    using Kind = Generator::Kind;
    switch (gen.kind()) {
        case Kind::Crystal:
            return "{\"kind\":\"crystal\",\"basis\":" + matrix_json(gen.basis()) +
                   ",\"offsets\":" + vecs_json(gen.offsets()) + "}";
        case Kind::Beatty:
            return "{\"kind\":\"beatty\",\"alpha\":" + g17(gen.alpha()) +
                   ",\"delta\":" + g17(gen.delta()) + "}";
        case Kind::Product:
            return "{\"kind\":\"product\",\"factor\":" + generator_to_json(gen.child()) +
                   ",\"eta\":" + g17(gen.eta()) + ",\"dim\":" + std::to_string(gen.dim()) + "}";
        case Kind::CutProject:
            return "{\"kind\":\"cut_project\",\"basis\":" + matrix_json(gen.basis()) +
                   ",\"phi\":" + vec_json(gen.phi()) + ",\"delta_vec\":" + vec_json(gen.delta_vec()) +
                   "}";
        case Kind::Perturbed:
            return "{\"kind\":\"perturbed\",\"base\":" + generator_to_json(gen.child()) +
                   ",\"target\":" + vec_json(gen.target()) +
                   ",\"displacement\":" + vec_json(gen.displacement()) + "}";
    }
    throw std::logic_error("generator: unknown kind");
}

Generator generator_from_json(const std::string& text) {
    return generator_from(json::parse(text));
}

std::string verdict_to_json(const Verdict& verdict) {
    std::string kind;
    switch (verdict.kind) {
        case Verdict::Kind::CertifiedCrystal: kind = "certified_crystal"; break;
        case Verdict::Kind::CertifiedPeriods: kind = "certified_periods"; break;
        case Verdict::Kind::Inconclusive: kind = "inconclusive"; break;
    }
    std::string s = "{\"kind\":\"" + kind + "\",\"certificate\":\"" + verdict.certificate +
                    "\",\"T\":" + g17(verdict.T) + ",\"measured\":" + g17(verdict.measured) +
                    ",\"threshold\":" + g17(verdict.threshold) +
                    ",\"caveat\":" + (verdict.window_caveat ? "true" : "false");
    if (!verdict.periods.empty()) s += ",\"periods\":" + vecs_json(verdict.periods);
    return s + "}";
}

std::string decomposition_to_json(const CosetDecomposition& dec) {
    return "{\"basis\":" + matrix_json(dec.basis) + ",\"base_point\":" + vec_json(dec.base_point) +
           ",\"offsets\":" + vecs_json(dec.offsets) + ",\"residual\":" + g17(dec.residual) + "}";
}

std::string registry_to_json(const PatchClassRegistry& registry) {
    std::string s = "{\"T\":" + g17(registry.T) + ",\"tol\":" + g17(registry.tol) +
                    ",\"exact\":" + (registry.exact ? "true" : "false") + ",\"classes\":[";
    for (std::size_t c = 0; c < registry.classes.size(); ++c) {
        const auto& cls = registry.classes[c];
        if (c) s += ",";
        std::string key;
        for (std::size_t i = 0; i < cls.key.size(); ++i) {
            if (i) key += ";";
            key += std::to_string(cls.key[i]);
        }
        const auto m0 = cls.members.front();
        std::span<const double> example(registry.center_coords.data() + m0 * registry.dim,
                                        static_cast<std::size_t>(registry.dim));
        s += "{\"key\":\"" + key + "\",\"size\":" + std::to_string(cls.members.size()) +
             ",\"example_center\":" + vec_json(example) + ",\"sigma_centers\":[";
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            if (i) s += ",";
            const auto m = cls.members[i];
            std::span<const double> p(registry.center_coords.data() + m * registry.dim,
                                      static_cast<std::size_t>(registry.dim));
            s += vec_json(p);
        }
        s += "]}";
    }
    return s + "]}";
}

std::string kappa_report_to_json(const KappaReport& report) {
    std::string s = "{\"n\":" + std::to_string(report.n) +
                    ",\"delone_lower\":" + g17(report.delone_lower) +
                    ",\"delone_upper\":" + g17(report.delone_upper) +
                    ",\"lattice_upper\":" + g17(report.lattice_upper);
    if (report.exact) s += ",\"exact\":" + g17(*report.exact);
    s += ",\"sources\":[";
    for (std::size_t i = 0; i < report.sources.size(); ++i) {
        if (i) s += ",";
        s += "\"" + report.sources[i] + "\"";
    }
    return s + "]}";
}

std::string curve_to_csv(const ComplexityCurve& curve) {
    std::string s = "T,value_lo,value_hi,exact\n";
    for (const auto& row : curve.rows)
        s += g17(row.T) + "," + g17(row.lo) + "," + g17(row.hi) + "," +
             (row.exact ? "1" : "0") + "\n";
    return s;
}

std::string combined_curve_csv(const ComplexityCurve& counts, const ComplexityCurve& reps) {
    if (counts.rows.size() != reps.rows.size())
        throw std::invalid_argument("curve: row count mismatch");
    std::string s = "T,N_lo,N_exact,M_lo,M_hi,M_exact\n";
    for (std::size_t i = 0; i < counts.rows.size(); ++i) {
        const auto& n = counts.rows[i];
        const auto& m = reps.rows[i];
        s += g17(n.T) + "," + g17(n.lo) + "," + (n.exact ? "1" : "0") + "," + g17(m.lo) + "," +
             g17(m.hi) + "," + (m.exact ? "1" : "0") + "\n";
    }
    return s;
}

std::string report_to_csv(const MorseHedlundReport& report) {
    std::string s = "m,complexity,bound,complexity_ok,recurrence,recurrence_complete,recurrence_ok,ratio\n";
    for (const auto& row : report.rows)
        s += std::to_string(row.m) + "," + std::to_string(row.complexity) + "," +
             std::to_string(row.bound) + "," + (row.complexity_ok ? "1" : "0") + "," +
             std::to_string(row.recurrence) + "," + (row.recurrence_complete ? "1" : "0") + "," +
             (row.recurrence_ok ? "1" : "0") + "," + g17(row.ratio) + "\n";
    return s;
}

std::string word_to_text(const Word& w) {
    std::string s;
    const bool digits = w.alphabet <= 10;
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (!digits && i) s += " ";
        s += std::to_string(w.symbols[i]);
    }
    return s + "\n";
}

std::string ndword_to_text(const NdWord& w) {
    std::string s = std::to_string(w.dim);
    for (int e : w.extents) s += " " + std::to_string(e);
    s += " " + std::to_string(w.alphabet) + "\n";
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(w.symbols[i]);
    }
    return s + "\n";
}

Word word_from_text(const std::string& text) {
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') break;
        line.clear();
    }
    if (line.empty()) throw std::invalid_argument("word: empty file");
    std::vector<int> symbols;
    if (line.find_first_of(" \t") == std::string::npos) {
        for (char c : line) {
            if (c < '0' || c > '9') throw std::invalid_argument("word: invalid symbol character");
            symbols.push_back(c - '0');
        }
    } else {
        std::istringstream ls(line);
        int v = 0;
        while (ls >> v) symbols.push_back(v);
    }
    return Word::from_symbols(std::move(symbols));
}

NdWord ndword_from_text(const std::string& text) {
    std::istringstream in(text);
    int dim = 0;
    if (!(in >> dim) || dim < 1 || dim > 8) throw std::invalid_argument("word: bad header");
    std::vector<int> extents(dim);
    std::size_t total = 1;
    for (int d = 0; d < dim; ++d) {
        if (!(in >> extents[d]) || extents[d] < 1) throw std::invalid_argument("word: bad header");
        total *= static_cast<std::size_t>(extents[d]);
    }
    int alphabet = 0;
    if (!(in >> alphabet) || alphabet < 1) throw std::invalid_argument("word: bad header");
    std::vector<int> symbols;
    symbols.reserve(total);
    int v = 0;
    while (in >> v) symbols.push_back(v);
    auto w = NdWord::from_box(std::move(extents), std::move(symbols));
    if (w.alphabet > alphabet) throw std::invalid_argument("word: symbol outside declared alphabet");
    w.alphabet = alphabet;
    return w;
}

}  // namespace delone::io
