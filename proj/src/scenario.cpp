#include "ssqw/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "ssqw/errors.hpp"

namespace ssqw {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return it.key() == k; });
        if (!known) throw SchemaError("unknown key '" + it.key() + "' in " + path);
    }
}

const json& require_object(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) throw SchemaError("missing key '" + std::string(key) + "' in " + path);
    const json& v = j.at(key);
    if (!v.is_object()) throw SchemaError(path + "." + key + " must be an object");
    return v;
}

double require_number(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) throw SchemaError("missing key '" + std::string(key) + "' in " + path);
    const json& v = j.at(key);
    if (!v.is_number()) throw SchemaError(path + "." + key + " must be a number");
    return v.get<double>();
}

int require_int(const json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) throw SchemaError("missing key '" + std::string(key) + "' in " + path);
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw SchemaError(path + "." + key + " must be an integer");
    return v.get<int>();
}

CoinSite parse_limit(const json& j, const std::string& path) {
    reject_unknown_keys(j, path, {"a", "b_re", "b_im"});
    const double a = require_number(j, path, "a");
    const double b_re = require_number(j, path, "b_re");
    const double b_im = require_number(j, path, "b_im");
    try {
        return make_coin_site(a, complexd(b_re, b_im));
    } catch (const NormalizationError& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

}  // namespace

WalkSpec load_scenario(const json& j) {
    if (!j.is_object()) throw SchemaError("scenario must be a JSON object");
    reject_unknown_keys(j, "scenario", {"shift", "coin"});

    const json& sj = require_object(j, "scenario", "shift");
    reject_unknown_keys(sj, "shift", {"p", "q_re", "q_im"});
    ShiftParams shift;
    try {
        shift = make_shift(require_number(sj, "shift", "p"),
                           complexd(require_number(sj, "shift", "q_re"),
                                    require_number(sj, "shift", "q_im")));
    } catch (const NormalizationError& e) {
        throw SchemaError(std::string("shift: ") + e.what());
    }

    const json& cj = require_object(j, "scenario", "coin");
    reject_unknown_keys(cj, "coin",
                        {"kind", "limit_minus", "limit_plus", "breakpoints", "width", "phi"});
    if (!cj.contains("kind") || !cj.at("kind").is_string())
        throw SchemaError("coin.kind must be one of \"step\", \"multistep\", \"tanh\"");
    const std::string kind = cj.at("kind").get<std::string>();

    const CoinSite limit_minus = parse_limit(require_object(cj, "coin", "limit_minus"),
                                             "coin.limit_minus");
    const CoinSite limit_plus = parse_limit(require_object(cj, "coin", "limit_plus"),
                                            "coin.limit_plus");

    if (kind == "tanh") {
        if (cj.contains("breakpoints"))
            throw SchemaError("key 'breakpoints' does not apply to kind 'tanh'");
        const double width = require_number(cj, "coin", "width");
        if (!(width > 0.0)) throw SchemaError("coin.width must be positive");
        const double phi = cj.contains("phi") ? require_number(cj, "coin", "phi") : 0.0;
        CoinProfile profile = CoinProfile::tanh_profile(limit_minus.a, limit_plus.a, width, phi);
        if (std::abs(profile.limit_minus().b - limit_minus.b) > 1e-9 ||
            std::abs(profile.limit_plus().b - limit_plus.b) > 1e-9)
            throw SchemaError(
                "coin limits inconsistent with the tanh family: b must equal "
                "e^{i phi} sqrt(1 - a^2)");
        return WalkSpec{shift, profile};
    }

    if (kind != "step" && kind != "multistep")
        throw SchemaError("coin.kind must be one of \"step\", \"multistep\", \"tanh\"");
    if (cj.contains("width")) throw SchemaError("key 'width' applies to kind 'tanh' only");
    if (cj.contains("phi")) throw SchemaError("key 'phi' applies to kind 'tanh' only");

    std::vector<Breakpoint> breakpoints;
    if (cj.contains("breakpoints")) {
        const json& bj = cj.at("breakpoints");
        if (!bj.is_array()) throw SchemaError("coin.breakpoints must be an array");
        int idx = 0;
        for (const json& e : bj) {
            std::ostringstream path;
            path << "coin.breakpoints[" << idx++ << "]";
            if (!e.is_object()) throw SchemaError(path.str() + " must be an object");
            reject_unknown_keys(e, path.str(), {"x", "a", "b_re", "b_im"});
            Breakpoint bp;
            bp.x = require_int(e, path.str(), "x");
            const double a = require_number(e, path.str(), "a");
            const double b_re = require_number(e, path.str(), "b_re");
            const double b_im = require_number(e, path.str(), "b_im");
            try {
                bp.value = make_coin_site(a, complexd(b_re, b_im));
            } catch (const NormalizationError& err) {
                throw SchemaError(path.str() + ": " + err.what());
            }
            breakpoints.push_back(bp);
        }
    }

    if (kind == "step") {
        if (breakpoints.empty())
            return WalkSpec{shift, CoinProfile::step(limit_minus, limit_plus, 0)};
        if (breakpoints.size() != 1)
            throw SchemaError("kind 'step' takes at most one breakpoint");
    } else if (breakpoints.empty()) {
        throw SchemaError("kind 'multistep' needs a nonempty breakpoints array");
    }

    try {
        if (kind == "step") {
            // validates the single breakpoint value against limit_plus
            (void)CoinProfile::multi_step(limit_minus, limit_plus, breakpoints);
            return WalkSpec{shift,
                            CoinProfile::step(limit_minus, limit_plus, breakpoints.front().x)};
        }
        return WalkSpec{shift, CoinProfile::multi_step(limit_minus, limit_plus,
                                                       std::move(breakpoints))};
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("coin.breakpoints: ") + e.what());
    }
}

WalkSpec load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    return load_scenario(j);
}

nlohmann::json scenario_to_json(const WalkSpec& spec) {
    json j;
    j["shift"] = {{"p", spec.shift.p}, {"q_re", spec.shift.q.real()},
                  {"q_im", spec.shift.q.imag()}};
    auto limit_json = [](const CoinSite& c) {
        return json{{"a", c.a}, {"b_re", c.b.real()}, {"b_im", c.b.imag()}};
    };
    json coin;
    coin["limit_minus"] = limit_json(spec.coin.limit_minus());
    coin["limit_plus"] = limit_json(spec.coin.limit_plus());
    switch (spec.coin.kind()) {
        case ProfileKind::Tanh:
            coin["kind"] = "tanh";
            coin["width"] = spec.coin.width();
            coin["phi"] = spec.coin.phi();
            break;
        case ProfileKind::Step:
        case ProfileKind::MultiStep: {
            coin["kind"] = spec.coin.kind() == ProfileKind::Step ? "step" : "multistep";
            json arr = json::array();
            for (const auto& bp : spec.coin.breakpoints())
                arr.push_back(json{{"x", bp.x},
                                   {"a", bp.value.a},
                                   {"b_re", bp.value.b.real()},
                                   {"b_im", bp.value.b.imag()}});
            coin["breakpoints"] = arr;
            break;
        }
    }
    j["coin"] = coin;
    return j;
}

}  // namespace ssqw
