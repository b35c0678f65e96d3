#include "hypermass/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypermass/ads.hpp"
#include "hypermass/errors.hpp"

namespace hypermass {

namespace {

double number_field(const Json& doc, const char* key) {
    if (!doc.contains(key)) throw ConfigError(std::string("profile document lacks \"") + key + "\"");
    const Json& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(std::string("profile field \"") + key + "\" must be a number");
    return v.get<double>();
}

double number_or(const Json& doc, const char* key, double fallback) {
    return doc.contains(key) ? number_field(doc, key) : fallback;
}

void reject_unknown(const Json& doc, std::initializer_list<const char*> allowed) {
    for (const auto& item : doc.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw ConfigError("unknown profile field \"" + item.key() + "\"");
    }
}

}  // namespace

RadialProfile profile_from_json(const Json& doc) {
    if (!doc.is_object()) throw ConfigError("profile document must be a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string()) {
        throw ConfigError("profile document needs a string \"kind\"");
    }
    const std::string kind = doc.at("kind").get<std::string>();
    const double n_raw = number_field(doc, "n");
    if (n_raw != std::floor(n_raw) || n_raw < 3) throw ConfigError("profile n must be an integer >= 3");
    const Dimension n(static_cast<int>(n_raw));
    try {
        if (kind == "ads") {
            reject_unknown(doc, {"kind", "n", "m"});
            return ads_profile(n, number_field(doc, "m"));
        }
        if (kind == "constant") {
            reject_unknown(doc, {"kind", "n", "value"});
            return constant_profile(n, number_or(doc, "value", 0.0));
        }
        if (kind == "sech") {
            reject_unknown(doc, {"kind", "n", "a", "b", "p", "omega", "offset"});
            SechParams q;
            q.a = number_or(doc, "a", q.a);
            q.b = number_or(doc, "b", q.b);
            q.p = number_or(doc, "p", q.p);
            q.omega = number_or(doc, "omega", q.omega);
            q.offset = number_or(doc, "offset", q.offset);
            return sech_profile(n, q);
        }
        if (kind == "sampled") {
            reject_unknown(doc, {"kind", "n", "m", "boundary", "samples"});
            BoundaryKind boundary = BoundaryKind::Entire;
            if (doc.contains("boundary")) {
                const Json& b = doc.at("boundary");
                if (b == "minimal") {
                    boundary = BoundaryKind::MinimalBoundary;
                } else if (b != "entire") {
                    throw ConfigError("profile boundary must be \"entire\" or \"minimal\"");
                }
            }
            if (!doc.contains("samples") || !doc.at("samples").is_array()) {
                throw ConfigError("sampled profile needs a \"samples\" array");
            }
            std::vector<ProfileSample> samples;
            for (const Json& s : doc.at("samples")) {
                if (!s.is_object()) throw ConfigError("profile samples must be objects");
                reject_unknown(s, {"r", "f", "f1", "f2"});
                samples.push_back({number_field(s, "r"), number_field(s, "f"),
                                   number_field(s, "f1"), number_field(s, "f2")});
            }
            return sampled_profile(n, std::move(samples), boundary);
        }
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid profile: ") + e.what());
    }
    throw ConfigError("unknown profile kind \"" + kind + "\"");
}

Json sampled_profile_json(const RadialProfile& f, std::span<const double> radii) {
    Json doc;
    doc["kind"] = "sampled";
    doc["n"] = f.dimension().value();
    doc["boundary"] = f.boundary_kind() == BoundaryKind::Entire ? "entire" : "minimal";
    Json samples = Json::array();
    for (const ProfileSample& s : sample_profile(f, radii)) {
        samples.push_back({{"r", s.r}, {"f", s.f}, {"f1", s.f1}, {"f2", s.f2}});
    }
    doc["samples"] = std::move(samples);
    return doc;
}

Json to_json(const MassReport& r) {
    return {{"kappa", r.kappa},
            {"m_boundary", r.m_boundary},
            {"m_boundary_error", r.m_boundary_error},
            {"m_levelset_bulk", r.m_levelset_bulk},
            {"m_levelset_boundary", r.m_levelset_boundary},
            {"m_levelset_total", r.m_levelset_total},
            {"h_used", r.h_used},
            {"r_h", r.r_h},
            {"residual_identity", r.residual_identity},
            {"tolerances", {{"abs", r.tol.abs}, {"rel", r.tol.rel}, {"reg", r.tol.reg}}}};
}

Json to_json(const HeightBoundReport& r) {
    return {{"n", r.n},
            {"beta", r.beta},
            {"m", r.m},
            {"h0", r.h0},
            {"sup_f", r.sup_f},
            {"C", r.C},
            {"bound", r.bound},
            {"ratio", r.ratio},
            {"verdict", r.verdict},
            {"degenerate", r.degenerate},
            {"ode", {{"blowup_numeric", r.blowup_numeric}, {"blowup_closed", r.blowup_closed}}}};
}

Json to_json(const SweepTable& t) {
    Json rows = Json::array();
    for (const SweepRow& row : t.rows) {
        rows.push_back({{"m", row.m},
                        {"M_A", row.mass_A},
                        {"M_Bplus", row.mass_B_plus},
                        {"M_Bminus", row.mass_B_minus},
                        {"flat_upper", row.flat_upper},
                        {"ratio", row.ratio},
                        {"power_ratio", row.power_ratio},
                        {"h0", row.h0}});
    }
    return {{"n", t.n},
            {"rho", t.rho},
            {"beta", t.beta},
            {"rows", std::move(rows)},
            {"strictly_decreasing", t.strictly_decreasing},
            {"empirical_c_tilde", t.empirical_c_tilde},
            {"ratio_slope", t.ratio_slope}};
}

Json to_json(const OdeSolution& s) {
    return {{"n", s.n},
            {"beta", s.beta},
            {"cap", s.cap},
            {"steps", s.samples.size()},
            {"blowup_numeric", s.blowup_height},
            {"blowup_closed", s.closed_form_blowup}};
}

std::string sweep_csv(const SweepTable& t) {
    std::string out = "m,M_A,M_Bplus,M_Bminus,flat_upper,ratio\n";
    char buffer[256];
    for (const SweepRow& row : t.rows) {
        std::snprintf(buffer, sizeof buffer, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", row.m,
                      row.mass_A, row.mass_B_plus, row.mass_B_minus, row.flat_upper, row.ratio);
        out += buffer;
    }
    return out;
}

std::string format_number(double x) { return Json(x).dump(); }

}  // namespace hypermass
