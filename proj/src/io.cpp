#include "gahp/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gahp {

using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError(where + ": expected a number, got " + v.dump());
    return v.get<double>();
}

std::size_t count(const json& v, const std::string& where) {
    if (!v.is_number_unsigned()) {
        throw ParseError(where + ": expected a non-negative integer, got " + v.dump());
    }
    return v.get<std::size_t>();
}

std::string text(const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where + ": expected a string, got " + v.dump());
    return v.get<std::string>();
}

json matrix_json(const PCMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto r = m.row(i);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    return rows;
}

json panel_json(const ExpertPanel& panel, std::span<const std::string> ids) {
    json experts = json::array();
    for (std::size_t q = 0; q < panel.experts(); ++q) {
        const std::string id = q < ids.size() ? ids[q] : "e" + std::to_string(q + 1);
        experts.push_back({{"id", id}, {"matrix", matrix_json(panel[q])}});
    }
    return {{"n", panel.alternatives()}, {"experts", std::move(experts)}};
}

DistanceMetric parse_metric(const std::string& s) {
    if (s == "manhattan") return DistanceMetric::manhattan;
    if (s == "euclidean") return DistanceMetric::euclidean;
    if (s == "chebyshev") return DistanceMetric::chebyshev;
    throw ParseError("metric: unknown distance '" + s + "'");
}

AggregateScale parse_scale(const std::string& s, const std::string& where) {
    if (s == "raw") return AggregateScale::raw;
    if (s == "normalized") return AggregateScale::normalized;
    throw ParseError(where + ": expected 'raw' or 'normalized', got '" + s + "'");
}

AidConfig parse_credibility(const json& v) {
    const std::string where = "credibility";
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "ratio_9_4_1") return {CredibilityScale3::from_ratios(9.0, 4.0, 1.0)};
        if (s == "example") return {credibility_from_matrix(example_credibility_matrix())};
        throw ParseError(where + ": unknown preset '" + s + "'");
    }
    if (!v.is_object() || v.size() != 1) {
        throw ParseError(where + ": expected a preset name or one of "
                                 "{\"ratios\": [h,m,l]}, {\"matrix\": [c12,c13,c23]}, "
                                 "{\"procedural_gain\": g}");
    }
    if (v.contains("ratios")) {
        const auto& r = v["ratios"];
        if (!r.is_array() || r.size() != 3) throw ParseError(where + ".ratios: expected 3 numbers");
        return {CredibilityScale3::from_ratios(number(r[0], where + ".ratios[0]"),
                                               number(r[1], where + ".ratios[1]"),
                                               number(r[2], where + ".ratios[2]"))};
    }
    if (v.contains("matrix")) {
        const auto& r = v["matrix"];
        if (!r.is_array() || r.size() != 3) throw ParseError(where + ".matrix: expected 3 numbers");
        const double upper[] = {number(r[0], where + ".matrix[0]"), number(r[1], where + ".matrix[1]"),
                                number(r[2], where + ".matrix[2]")};
        return {credibility_from_matrix(PCMatrix::from_upper_triangle(3, upper))};
    }
    if (v.contains("procedural_gain")) {
        return {ProceduralCredibility{number(v["procedural_gain"], where + ".procedural_gain")}};
    }
    throw ParseError(where + ": unknown form " + v.dump());
}

} // namespace

PanelFile parse_panel(std::string_view json_text, double reciprocity_tol) {
    const json doc = parse_json(json_text);
    const std::size_t n = count(field(doc, "n", "panel"), "n");
    const json& experts = field(doc, "experts", "panel");
    if (!experts.is_array() || experts.empty()) {
        throw ParseError("experts: expected a non-empty array");
    }

    std::vector<std::string> ids;
    std::vector<PCMatrix> matrices;
    std::set<std::string> seen;
    for (std::size_t q = 0; q < experts.size(); ++q) {
        const std::string where = "experts[" + std::to_string(q) + "]";
        const json& e = experts[q];
        std::string id = e.is_object() && e.contains("id") ? text(e["id"], where + ".id")
                                                            : "e" + std::to_string(q + 1);
        if (!seen.insert(id).second) throw ParseError(where + ".id: duplicate id '" + id + "'");
        const json& rows = field(e, "matrix", where);
        if (!rows.is_array() || rows.size() != n) {
            throw ParseError(where + ".matrix: expected " + std::to_string(n) + " rows");
        }
        std::vector<double> flat;
        flat.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string row_where = where + ".matrix[" + std::to_string(i) + "]";
            if (!rows[i].is_array() || rows[i].size() != n) {
                throw ParseError(row_where + ": expected " + std::to_string(n) + " entries");
            }
            for (std::size_t j = 0; j < n; ++j)
                flat.push_back(number(rows[i][j], row_where + "[" + std::to_string(j) + "]"));
        }
        try {
            matrices.push_back(PCMatrix::from_rows(n, flat, reciprocity_tol));
        } catch (const Error& err) {
            throw DomainError("expert '" + id + "': " + err.what());
        }
        ids.push_back(std::move(id));
    }
    return PanelFile{std::move(ids), ExpertPanel(std::move(matrices))};
}

PanelFile read_panel(const std::filesystem::path& path, double reciprocity_tol) {
    return parse_panel(slurp(path), reciprocity_tol);
}

std::string format_panel(const ExpertPanel& panel, std::span<const std::string> ids) {
    return panel_json(panel, ids).dump(2) + "\n";
}

void write_panel(const std::filesystem::path& path, const ExpertPanel& panel,
                 std::span<const std::string> ids) {
    spit(path, format_panel(panel, ids));
}

namespace {

RunConfig config_from_json(const json& doc);

} // namespace

RunConfig parse_config(std::string_view json_text) {
    const json doc = parse_json(json_text);
    try {
        return config_from_json(doc);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
}

namespace {

RunConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("config: expected an object");
    static const std::set<std::string> known{
        "seed",        "counts",     "alphas",         "panel_size", "metric",
        "apdd_reference", "h",       "l",              "credibility", "beta",
        "saturation",  "max_bribes", "recompute_support", "epsilon_distribution",
        "compare_scale", "bucket_width", "threshold",  "workers"};
    for (const auto& [key, _] : doc.items()) {
        if (!known.contains(key)) throw ParseError("config: unknown key '" + key + "'");
    }

    RunConfig cfg;
    auto& corpus = cfg.corpus;
    auto& exp = cfg.experiment;
    if (doc.contains("seed")) corpus.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("counts")) {
        const auto& c = doc["counts"];
        if (!c.is_object()) throw ParseError("counts: expected {\"<n>\": count, ...}");
        corpus.counts.clear();
        for (const auto& [key, value] : c.items()) {
            std::size_t n = 0;
            try {
                n = std::stoul(key);
            } catch (const std::exception&) {
                throw ParseError("counts: key '" + key + "' is not an alternative count");
            }
            if (n < 2) throw ParseError("counts: alternative count must be >= 2");
            corpus.counts.emplace_back(n, count(value, "counts." + key));
        }
        std::sort(corpus.counts.begin(), corpus.counts.end());
    }
    if (doc.contains("alphas")) {
        const auto& a = doc["alphas"];
        if (a.is_array()) {
            corpus.alphas.clear();
            for (std::size_t i = 0; i < a.size(); ++i)
                corpus.alphas.push_back(number(a[i], "alphas[" + std::to_string(i) + "]"));
        } else {
            corpus.alphas = alpha_grid(number(field(a, "start", "alphas"), "alphas.start"),
                                       number(field(a, "stop", "alphas"), "alphas.stop"),
                                       number(field(a, "step", "alphas"), "alphas.step"));
        }
        for (double x : corpus.alphas)
            if (!(x >= 1.0)) throw DomainError("alphas: every alpha must be >= 1");
    }
    if (doc.contains("panel_size")) corpus.panel_size = count(doc["panel_size"], "panel_size");
    if (doc.contains("epsilon_distribution")) {
        const auto s = text(doc["epsilon_distribution"], "epsilon_distribution");
        if (s == "log_uniform") corpus.epsilon = EpsilonDistribution::log_uniform;
        else if (s == "uniform") corpus.epsilon = EpsilonDistribution::uniform;
        else throw ParseError("epsilon_distribution: expected 'log_uniform' or 'uniform'");
    }

    if (doc.contains("metric")) exp.robust.apdd.metric = parse_metric(text(doc["metric"], "metric"));
    if (doc.contains("apdd_reference")) {
        exp.robust.apdd.reference =
            parse_scale(text(doc["apdd_reference"], "apdd_reference"), "apdd_reference");
    }
    if (doc.contains("h") || doc.contains("l")) {
        const double h = doc.contains("h") ? number(doc["h"], "h") : exp.robust.apdd.scale.h;
        const double l = doc.contains("l") ? number(doc["l"], "l") : exp.robust.apdd.scale.l;
        exp.robust.apdd.scale = CredibilityScale2(h, l);
    }
    if (doc.contains("credibility")) exp.robust.aid = parse_credibility(doc["credibility"]);
    if (doc.contains("beta")) exp.robust.beta = number(doc["beta"], "beta");
    if (!(exp.robust.beta >= 0.0 && exp.robust.beta <= 1.0)) {
        throw DomainError("beta: must lie in [0, 1]");
    }
    if (doc.contains("saturation")) exp.attack.saturation = number(doc["saturation"], "saturation");
    if (!(exp.attack.saturation > 1.0)) throw DomainError("saturation: must exceed 1");
    if (doc.contains("max_bribes")) exp.attack.max_bribes = count(doc["max_bribes"], "max_bribes");
    if (doc.contains("recompute_support")) {
        if (!doc["recompute_support"].is_boolean()) {
            throw ParseError("recompute_support: expected a boolean");
        }
        exp.attack.recompute_support = doc["recompute_support"].get<bool>();
    }
    if (doc.contains("compare_scale")) {
        exp.compare_scale = parse_scale(text(doc["compare_scale"], "compare_scale"), "compare_scale");
    }
    if (doc.contains("bucket_width")) {
        cfg.summary.bucket_width = number(doc["bucket_width"], "bucket_width");
        if (!(cfg.summary.bucket_width > 0.0)) throw DomainError("bucket_width: must be positive");
    }
    if (doc.contains("threshold")) cfg.summary.threshold = number(doc["threshold"], "threshold");
    if (doc.contains("workers")) cfg.workers = static_cast<int>(count(doc["workers"], "workers"));
    return cfg;
}

} // namespace

RunConfig read_config(const std::filesystem::path& path) { return parse_config(slurp(path)); }

Method parse_method(std::string_view name) {
    std::string s(name);
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "classic") return Method::classic;
    if (s == "apdd") return Method::apdd;
    if (s == "aid") return Method::aid;
    if (s == "mx") return Method::mx;
    throw ParseError("unknown method '" + std::string(name) + "' (classic, apdd, aid, mx)");
}

std::string format_number(double x) {
    if (std::isinf(x)) return "all";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
    out << "bucket_ci,method,metric,value,count\n";
    for (const auto& r : rows) {
        out << format_number(r.bucket_ci) << ',' << r.method << ',' << r.metric << ','
            << format_number(r.value) << ',' << r.count << '\n';
    }
}

namespace {

std::string join_vector(std::span<const double> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += format_number(v[i]);
    }
    return s;
}

} // namespace

void write_records_csv(std::ostream& out, std::span<const Experiment1Record> records) {
    out << "scenario_id,n,alpha,mean_ci,attack_succeeded,bribes_used,method,restoration,"
           "manhattan_mean,restored\n";
    for (const auto& r : records) {
        for (std::size_t m = 0; m < kRobustMethods.size(); ++m) {
            const auto& o = r.methods[m];
            out << r.scenario_id << ',' << r.alternatives << ',' << format_number(r.alpha) << ','
                << format_number(r.mean_ci) << ',' << (r.attack_succeeded ? 1 : 0) << ','
                << r.bribes_used << ',' << to_string(kRobustMethods[m]) << ','
                << (r.vacuous ? std::string("vacuous") : to_string(o.restoration())) << ','
                << format_number(o.distance) << ',' << join_vector(o.restored) << '\n';
        }
    }
}

void write_records_csv(std::ostream& out, std::span<const Experiment2Record> records) {
    out << "scenario_id,n,alpha,mean_ci,method,manhattan_mean,kendall\n";
    for (const auto& r : records) {
        for (std::size_t m = 0; m < kRobustMethods.size(); ++m) {
            out << r.scenario_id << ',' << r.alternatives << ',' << format_number(r.alpha) << ','
                << format_number(r.mean_ci) << ',' << to_string(kRobustMethods[m]) << ','
                << format_number(r.methods[m].distance) << ',' << r.methods[m].kendall << '\n';
        }
    }
}

void write_corpus_jsonl(std::ostream& out, std::span<const Scenario> scenarios) {
    for (const auto& s : scenarios) {
        json line{{"id", s.id},
                  {"base_id", s.base_id},
                  {"alpha", s.alpha},
                  {"mean_ci", s.mean_ci},
                  {"base_vector", std::vector<double>(s.base_vector.begin(), s.base_vector.end())},
                  {"panel", panel_json(s.panel, {})}};
        out << line.dump() << '\n';
    }
}

} // namespace gahp
