#include "report.hpp"

#include "kzq/errors.hpp"

namespace kzqtool {

json config_echo_json(const kzq::Config& cfg) {
    json j = json::object();
    for (const auto& [key, value] : cfg.entries()) j[key] = value;
    return j;
}

json fit_json(const kzq::PowerLawFit& fit) {
    json j;
    j["exponent"] = fit.exponent;
    j["stderr"] = fit.exponent_stderr;
    j["amplitude"] = fit.amplitude;
    j["window"] = json::array({fit.window_min, fit.window_max});
    j["n_points"] = fit.n_points;
    return j;
}

json analysis_json(const Curves& curves, kzq::WindowRule rule, double eps,
                   std::optional<double> coupling) {
    std::vector<kzq::CurveAnalysis> per_curve;
    per_curve.reserve(curves.size());
    for (const auto& [delta_max, curve] : curves)
        per_curve.push_back(kzq::analyze_curve(curve, rule, eps));

    json a_list = json::array();
    json plateau_list = json::array();
    json critical_list = json::array();
    int usable = 0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const double delta_max = curves[i].first;
        const kzq::CurveAnalysis& ca = per_curve[i];

        json a = json::object();
        a["delta_max"] = delta_max;
        a["fit"] = ca.has_fit ? fit_json(ca.fit) : json(nullptr);
        a_list.push_back(std::move(a));

        json p = json::object();
        p["delta_max"] = delta_max;
        p["found"] = ca.plateau.found;
        if (ca.plateau.found) {
            p["n_sat"] = ca.plateau.n_sat;
            p["tau_exit"] = ca.plateau.tau_exit;
            p["members"] = ca.plateau.members;
        }
        plateau_list.push_back(std::move(p));

        json c = json::object();
        c["delta_max"] = delta_max;
        c["tau_c"] = ca.has_critical ? json(ca.tau_c) : json(nullptr);
        if (ca.has_critical) ++usable;
        critical_list.push_back(std::move(c));
    }

    json exponents;
    exponents["a"] = std::move(a_list);
    if (usable >= 3) {
        const kzq::BreakdownSummary summary =
            kzq::breakdown_summary(curves, rule, eps);
        exponents["b"] = summary.b;
        exponents["b_stderr"] = summary.b_stderr;
        exponents["c"] = summary.c;
        exponents["c_stderr"] = summary.c_stderr;
    } else {
        exponents["b"] = nullptr;
        exponents["b_stderr"] = nullptr;
        exponents["c"] = nullptr;
        exponents["c_stderr"] = nullptr;
    }

    json out;
    out["exponents"] = std::move(exponents);
    out["plateaus"] = std::move(plateau_list);
    out["criticals"] = std::move(critical_list);

    if (coupling) {
        std::vector<kzq::DataPoint> xc_tauc;
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (per_curve[i].has_critical)
                xc_tauc.push_back(
                    {curves[i].first / (2.0 * *coupling), per_curve[i].tau_c});
        if (xc_tauc.size() >= 3) {
            const kzq::CriticalLawFit law = kzq::fit_critical_law(xc_tauc);
            json l;
            l["alpha"] = law.alpha;
            l["r2_linear"] = law.r2_linear;
            l["r2_log"] = law.r2_log;
            out["critical_law"] = std::move(l);
        } else {
            out["critical_law"] = nullptr;
        }
    }
    return out;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void add_json_file(kzq::RunManifest& manifest, const std::string& name,
                   const json& j) {
    manifest.add_file(name, dump_json(j));
}

std::string tool_version() { return std::string("kzq ") + KZQ_TOOL_VERSION; }

}  // namespace kzqtool
