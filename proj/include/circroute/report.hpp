#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "circroute/bounds.hpp"
#include "circroute/lattice.hpp"
#include "circroute/verify.hpp"
#include "circroute/wavelength.hpp"

namespace circroute {

inline constexpr const char* kVersion = "circroute 1.0.0";
inline constexpr const char* kReportSchema = "circroute-report v1";
inline constexpr const char* kCsvSchema = "# circroute-schema v1";

using Json = nlohmann::ordered_json;

struct ReportOptions {
    long long max_exhaustive = 2000;  // ceiling for BFS / colouring / uniformity work
};

namespace detail {

inline std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline Json rational_json(const Rational& r) {
    return Json{{"num", r.num}, {"den", r.den}, {"approx", r.to_double()}};
}

inline Json bound_value_json(const BoundValue& v) {
    Json j;
    if (v.exact) {
        j["num"] = v.exact->num;
        j["den"] = v.exact->den;
    }
    j["approx"] = v.approx;
    j["provenance"] = v.provenance;
    return j;
}

inline Json bracket_json(const BoundReport& r) {
    Json j;
    j["case"] = r.case_tag;
    j["lower"] = bound_value_json(r.lower);
    j["upper"] = bound_value_json(r.upper);
    if (r.achieved) j["achieved"] = *r.achieved; else j["achieved"] = nullptr;
    if (r.ratio) j["ratio"] = *r.ratio; else j["ratio"] = nullptr;
    j["tight"] = r.tight;
    return j;
}

}  // namespace detail

// Everything the front end shows for one instance. Exhaustive fields are
// absent above the ceiling and listed under `skipped`.
struct ReportDocument {
    long long n = 0, s = 0, q = 0, r = 0;
    LoadProfile loads;
    long long lemma7 = 0;
    Lemma8Bound lemma8{Lemma8Case::Gap, Rational(0)};
    Rational delta;

    std::optional<PackedBasis> basis;
    std::optional<long long> distance_sum;
    std::optional<long long> lemma6_bound;
    std::optional<long long> lemma9_sum;

    Rational cut_bound;
    MeanDistanceBound mean_distance;
    std::optional<Rational> theorem2_bound;
    std::optional<Rational> lemma9_bound;

    BracketPair forwarding;  // pi_arc / pi
    BracketPair optical;     // w_arc / w

    ColourCount colour_count{};
    std::optional<ColouringResult> arc_colouring;
    std::optional<ColouringResult> edge_colouring;

    std::optional<double> delta_threshold_value;
    RatioDiagnostics ratios;

    std::optional<bool> uniform_loads;
    std::optional<bool> lattice_oracle_ok;
    bool lemma7_matches_loads = false;

    std::vector<std::string> skipped;

    Json to_json() const;
    void to_table(std::ostream& os) const;
    static std::string csv_header();
    std::string csv_row(const std::string& status) const;
};

inline ReportDocument build_report(long long n, long long s, const ReportOptions& opt = {}) {
    ReportDocument doc;
    CirculantGraph g(n, s);
    doc.n = n; doc.s = s; doc.q = g.q(); doc.r = g.r();

    doc.loads = class_load_totals(g);
    doc.lemma7 = lemma7_formula(g);
    doc.lemma8 = lemma8_upper_bound(g);
    doc.delta = delta_term(g);
    doc.lemma7_matches_loads = doc.lemma7 == doc.loads.max_arc_load();

    doc.basis = packed_basis(g);
    doc.lemma6_bound = distance_sum_lower_bound(g);
    doc.lemma9_sum = sqrt_case_distance_sum(g);

    doc.cut_bound = lower_cut(g);
    doc.mean_distance = lower_mean_distance(g);
    doc.theorem2_bound = lower_theorem2(g);
    doc.lemma9_bound = lower_lemma9(g);
    doc.colour_count = colour_count_formula(g);
    if (n >= 25) doc.delta_threshold_value = delta_threshold(n);

    const bool exhaustive = n <= opt.max_exhaustive;
    BracketInputs in;
    in.max_arc_load = doc.loads.max_arc_load();
    in.max_edge_load = doc.loads.max_edge_load();
    in.sumf = doc.colour_count.sumf;

    if (exhaustive) {
        doc.distance_sum = distance_sum_from_zero(g);
        in.distance_sum = doc.distance_sum;

        Routing rt(g);
        if (n <= 200) {
            try {
                load_profile(rt, Uniformity::Check);
                doc.uniform_loads = true;
            } catch (const ConsistencyError&) {
                doc.uniform_loads = false;
            }
        } else {
            doc.skipped.push_back("uniformity check (n > 200)");
        }

        try {
            doc.arc_colouring = colour_routing(g, rt, Variant::Arc);
            doc.edge_colouring = colour_routing(g, rt, Variant::Edge);
            in.arc_colours = doc.arc_colouring->distinct_count;
            in.edge_colours = doc.edge_colouring->distinct_count;
        } catch (const DomainError& e) {
            doc.skipped.push_back(std::string("colouring (") + e.what() + ")");
        }

        if (doc.basis) {
            ParallelogramIndex index(g, *doc.basis);
            const auto dist = distances_from(g, 0);
            bool ok = true;
            for (Node t = 0; t < n && ok; ++t)
                ok = index.corner_distance(t) == dist[static_cast<size_t>(t)];
            doc.lattice_oracle_ok = ok;
        } else {
            doc.skipped.push_back("corner-distance oracle (no packed basis)");
        }
    } else {
        doc.skipped.push_back("distance sum (n > max-exhaustive)");
        doc.skipped.push_back("uniformity check (n > max-exhaustive)");
        doc.skipped.push_back("colouring (n > max-exhaustive)");
        doc.skipped.push_back("corner-distance oracle (n > max-exhaustive)");
    }

    doc.forwarding = theorem1_bracket(g, in);
    doc.optical = theorem4_bracket(g, in);
    doc.ratios = ratio_diagnostics(g, in);
    return doc;
}

inline Json ReportDocument::to_json() const {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["instance"] = Json{{"n", n}, {"s", s}, {"q", q}, {"r", r}};
    j["loads"] = Json{{"ring_cw", loads.ring_cw},   {"ring_acw", loads.ring_acw},
                      {"skip_cw", loads.skip_cw},   {"skip_acw", loads.skip_acw},
                      {"max_arc_load", loads.max_arc_load()},
                      {"max_edge_load", loads.max_edge_load()}};
    j["routing"] = Json{{"lemma7", lemma7},
                        {"lemma8_case", to_string(lemma8.c)},
                        {"lemma8_upper", detail::rational_json(lemma8.value)},
                        {"delta_term", detail::rational_json(delta)}};

    Json lat;
    if (basis) {
        lat["packed_basis_case"] = to_string(basis->tag);
        lat["basis"] = Json::array({Json::array({basis->a.x1, basis->a.x2}),
                                    Json::array({basis->b.x1, basis->b.x2})});
    } else {
        lat["packed_basis_case"] = nullptr;
        lat["basis"] = nullptr;
    }
    lat["distance_sum"] = distance_sum ? Json(*distance_sum) : Json(nullptr);
    lat["distance_sum_lower_bound"] = lemma6_bound ? Json(*lemma6_bound) : Json(nullptr);
    lat["sqrt_case_distance_sum"] = lemma9_sum ? Json(*lemma9_sum) : Json(nullptr);
    j["lattice"] = lat;

    Json low;
    low["cut"] = detail::rational_json(cut_bound);
    low["mean_distance_raw"] = mean_distance.raw;
    low["mean_distance"] = mean_distance.value;
    low["theorem2"] = theorem2_bound ? detail::rational_json(*theorem2_bound) : Json(nullptr);
    low["lemma9"] = lemma9_bound ? detail::rational_json(*lemma9_bound) : Json(nullptr);
    low["distance_sum_exact"] =
        distance_sum ? detail::rational_json(Rational(*distance_sum, 2)) : Json(nullptr);
    j["lower_bounds"] = low;

    j["brackets"] = Json{{"pi_arc", detail::bracket_json(forwarding.arc)},
                         {"pi", detail::bracket_json(forwarding.edge)},
                         {"w_arc", detail::bracket_json(optical.arc)},
                         {"w", detail::bracket_json(optical.edge)}};

    Json col;
    col["sumf"] = colour_count.sumf;
    col["regime"] = to_string(colour_count.regime);
    col["case_formula"] = colour_count.case_formula;
    col["arc_distinct"] = arc_colouring ? Json(arc_colouring->distinct_count) : Json(nullptr);
    col["edge_distinct"] = edge_colouring ? Json(edge_colouring->distinct_count) : Json(nullptr);
    col["arc_conflict_free"] = arc_colouring ? Json(arc_colouring->conflict_free) : Json(nullptr);
    col["edge_conflict_free"] = edge_colouring ? Json(edge_colouring->conflict_free) : Json(nullptr);
    j["colours"] = col;

    Json diag;
    diag["delta_threshold"] = delta_threshold_value ? Json(*delta_threshold_value) : Json(nullptr);
    diag["s_below_delta"] =
        delta_threshold_value ? Json(static_cast<double>(s) <= *delta_threshold_value) : Json(nullptr);
    auto opt_double = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    diag["forwarding_ratio"] = opt_double(ratios.forwarding_ratio);
    diag["forwarding_ratio_arc"] = opt_double(ratios.forwarding_ratio_arc);
    diag["optical_ratio"] = opt_double(ratios.optical_ratio);
    diag["optical_ratio_arc"] = opt_double(ratios.optical_ratio_arc);
    diag["corollary1_applicable"] = ratios.corollary1_applicable;
    diag["corollary2_applicable"] = ratios.corollary2_applicable;
    j["diagnostics"] = diag;

    Json ver;
    ver["lemma7_equals_max_arc"] = lemma7_matches_loads;
    ver["palette_identity"] = colour_count.sumf == colour_count.case_formula;
    ver["uniform_loads"] = uniform_loads ? Json(*uniform_loads) : Json(nullptr);
    ver["lattice_oracle"] = lattice_oracle_ok ? Json(*lattice_oracle_ok) : Json(nullptr);
    j["verification"] = ver;

    j["skipped"] = skipped;
    return j;
}

namespace detail {

inline std::string bound_str(const BoundValue& v) {
    if (v.exact) return v.exact->str();
    return format_double(v.approx);
}

inline void table_bracket(std::ostream& os, const BoundReport& r) {
    os << "  " << r.target << ": [" << bound_str(r.lower) << ", " << bound_str(r.upper) << "]";
    if (r.tight) os << "  TIGHT";
    os << "\n    case: " << r.case_tag << "\n    lower: " << bound_str(r.lower) << " ("
       << format_double(r.lower.approx) << ")  via " << r.lower.provenance << "\n    upper: "
       << bound_str(r.upper) << " (" << format_double(r.upper.approx) << ")  via "
       << r.upper.provenance << "\n";
    if (r.achieved) os << "    achieved: " << *r.achieved << "\n";
    if (r.ratio) os << "    ratio: " << format_double(*r.ratio) << "\n";
}

}  // namespace detail

inline void ReportDocument::to_table(std::ostream& os) const {
    os << "instance C_" << n << "(1," << s << ")  q=" << q << " r=" << r << "\n";
    os << "loads: ring_cw=" << loads.ring_cw << " ring_acw=" << loads.ring_acw
       << " skip_cw=" << loads.skip_cw << " skip_acw=" << loads.skip_acw
       << "  max_arc=" << loads.max_arc_load() << " max_edge=" << loads.max_edge_load() << "\n";
    os << "routing: lemma7=" << lemma7 << "  lemma8=" << to_string(lemma8.c) << ":"
       << lemma8.value.str() << "\n";
    if (basis)
        os << "lattice: basis case " << to_string(basis->tag) << " {(" << basis->a.x1 << ","
           << basis->a.x2 << "),(" << basis->b.x1 << "," << basis->b.x2 << ")}";
    else
        os << "lattice: packed basis NotApplicable";
    if (distance_sum) os << "  distance_sum=" << *distance_sum;
    os << "\n";
    os << "brackets:\n";
    detail::table_bracket(os, forwarding.edge);
    detail::table_bracket(os, forwarding.arc);
    detail::table_bracket(os, optical.edge);
    detail::table_bracket(os, optical.arc);
    os << "colours: sumf=" << colour_count.sumf << " regime=" << to_string(colour_count.regime)
       << " case_formula=" << colour_count.case_formula;
    if (arc_colouring) os << " arc_distinct=" << arc_colouring->distinct_count;
    if (edge_colouring) os << " edge_distinct=" << edge_colouring->distinct_count;
    os << "\n";
    if (ratios.forwarding_ratio)
        os << "forwarding ratio: " << detail::format_double(*ratios.forwarding_ratio) << "\n";
    if (ratios.optical_ratio)
        os << "optical ratio: " << detail::format_double(*ratios.optical_ratio) << "\n";
    for (const auto& skip : skipped) os << "skipped: " << skip << "\n";
}

inline std::string ReportDocument::csv_header() {
    return "n,s,q,r,status,ring_cw,ring_acw,skip_cw,skip_acw,max_arc_load,max_edge_load,"
           "lemma7,lemma8_case,lemma8_upper,thm1_case,pi_arc_lower,pi_arc_upper,pi_lower,"
           "pi_upper,pi_ratio,thm4_case,w_arc_upper,w_upper,regime,sumf,arc_colours,"
           "edge_colours,forwarding_ratio,optical_ratio,corollary1,corollary2,verified";
}

inline std::string ReportDocument::csv_row(const std::string& status) const {
    std::ostringstream os;
    os << n << ',' << s << ',' << q << ',' << r << ',' << status << ',';
    os << loads.ring_cw << ',' << loads.ring_acw << ',' << loads.skip_cw << ','
       << loads.skip_acw << ',' << loads.max_arc_load() << ',' << loads.max_edge_load() << ',';
    os << lemma7 << ',' << to_string(lemma8.c) << ',' << lemma8.value.str() << ',';
    os << forwarding.arc.case_tag << ',' << detail::bound_str(forwarding.arc.lower) << ','
       << detail::bound_str(forwarding.arc.upper) << ',' << detail::bound_str(forwarding.edge.lower)
       << ',' << detail::bound_str(forwarding.edge.upper) << ','
       << (forwarding.edge.ratio ? detail::format_double(*forwarding.edge.ratio) : "") << ',';
    os << optical.arc.case_tag << ',' << detail::bound_str(optical.arc.upper) << ','
       << detail::bound_str(optical.edge.upper) << ',';
    os << to_string(colour_count.regime) << ',' << colour_count.sumf << ',';
    os << (arc_colouring ? std::to_string(arc_colouring->distinct_count) : "") << ','
       << (edge_colouring ? std::to_string(edge_colouring->distinct_count) : "") << ',';
    os << (ratios.forwarding_ratio ? detail::format_double(*ratios.forwarding_ratio) : "") << ','
       << (ratios.optical_ratio ? detail::format_double(*ratios.optical_ratio) : "") << ',';
    os << (ratios.corollary1_applicable ? "true" : "false") << ','
       << (ratios.corollary2_applicable ? "true" : "false") << ',';
    const bool have_flags = uniform_loads || lattice_oracle_ok || arc_colouring;
    if (have_flags) {
        const bool ok = lemma7_matches_loads && uniform_loads.value_or(true) &&
                        lattice_oracle_ok.value_or(true) &&
                        (!arc_colouring || arc_colouring->conflict_free) &&
                        (!edge_colouring || edge_colouring->conflict_free);
        os << (ok ? "true" : "false");
    }
    return os.str();
}

// Sweep over (n,s) instances in lexicographic order: rows are computed by a
// worker pool and flushed in order as soon as they are ready.
struct SweepOptions {
    long long n_lo = 5, n_hi = 5;
    std::vector<long long> s_values;  // empty = all valid s
    int jobs = 1;
    ReportOptions report;
};

inline std::vector<std::pair<long long, long long>> sweep_instances(const SweepOptions& opt) {
    std::vector<std::pair<long long, long long>> out;
    for (long long n = opt.n_lo; n <= opt.n_hi; ++n) {
        if (opt.s_values.empty()) {
            for (long long s = 2; 2 * s < n; ++s) out.emplace_back(n, s);
        } else {
            for (long long s : opt.s_values)
                if (s > 1 && 2 * s < n && n >= 5) out.emplace_back(n, s);
        }
    }
    return out;
}

inline long long run_sweep(const SweepOptions& opt, std::ostream& data, std::ostream& progress) {
    const auto instances = sweep_instances(opt);
    data << kCsvSchema << "\n" << ReportDocument::csv_header() << "\n";

    std::vector<std::optional<std::string>> rows(instances.size());
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= instances.size()) return;
            const auto [n, s] = instances[idx];
            std::string row;
            try {
                row = build_report(n, s, opt.report).csv_row("ok");
            } catch (const std::exception& e) {
                std::ostringstream os;
                os << n << ',' << s << ",,,error: " << e.what();
                row = os.str();
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                rows[idx] = std::move(row);
            }
            cv.notify_all();
        }
    };

    const int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

    size_t flushed = 0;
    long long last_n = -1;
    {
        std::unique_lock<std::mutex> lock(mu);
        while (flushed < instances.size()) {
            cv.wait(lock, [&] { return rows[flushed].has_value(); });
            while (flushed < instances.size() && rows[flushed]) {
                data << *rows[flushed] << "\n";
                if (instances[flushed].first != last_n) {
                    last_n = instances[flushed].first;
                    progress << "sweep: n=" << last_n << "\n";
                }
                rows[flushed].reset();
                ++flushed;
            }
            data.flush();
        }
    }
    for (auto& t : pool) t.join();
    return static_cast<long long>(instances.size());
}

}  // namespace circroute
