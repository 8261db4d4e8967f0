#include "p1p1/fat/point_config.hpp"

#include <limits>

#include "p1p1/error.hpp"

namespace p1p1::fat {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::random: return "random";
    case Provenance::grid: return "grid";
    case Provenance::explicit_list: return "explicit";
    }
    return "explicit";
}

namespace {

Provenance provenance_from_string(const std::string& s)
{
    if (s == "random") return Provenance::random;
    if (s == "grid") return Provenance::grid;
    if (s == "explicit") return Provenance::explicit_list;
    throw InvalidInput("unknown provenance '" + s + "'");
}

bool is_zero_pair(const P1Point& p)
{
    return sgn(p.x0) == 0 && sgn(p.x1) == 0;
}

} // namespace

PointConfig PointConfig::subset(const std::vector<bool>& keep) const
{
    PointConfig out;
    out.provenance = provenance;
    out.seed = seed;
    for (std::size_t k = 0; k < points.size(); ++k)
        if (keep.at(k)) out.points.push_back(points[k]);
    return out;
}

void validate(const PointConfig& config)
{
    for (std::size_t k = 0; k < config.points.size(); ++k) {
        const auto& p = config.points[k];
        if (is_zero_pair(p.x) || is_zero_pair(p.y))
            throw InvalidInput("point " + std::to_string(k + 1) + " has an all-zero coordinate pair");
        for (std::size_t l = 0; l < k; ++l) {
            const auto& q = config.points[l];
            if (p.x.same_as(q.x) && p.y.same_as(q.y))
                throw InvalidInput("points " + std::to_string(l + 1) + " and " + std::to_string(k + 1) +
                                   " coincide");
        }
    }
}

bool have_distinct_rules(const PointConfig& config)
{
    for (std::size_t k = 0; k < config.points.size(); ++k)
        for (std::size_t l = 0; l < k; ++l)
            if (config.points[k].x.same_as(config.points[l].x) || config.points[k].y.same_as(config.points[l].y))
                return false;
    return true;
}

PointConfig grid_config(const std::vector<P1Point>& xs, const std::vector<P1Point>& ys)
{
    auto check = [](const std::vector<P1Point>& list, const char* name) {
        if (list.empty()) throw InvalidInput(std::string("grid factor ") + name + " is empty");
        for (std::size_t k = 0; k < list.size(); ++k) {
            if (is_zero_pair(list[k])) throw InvalidInput(std::string("grid factor ") + name + " has [0:0]");
            for (std::size_t l = 0; l < k; ++l)
                if (list[k].same_as(list[l]))
                    throw InvalidInput(std::string("grid factor ") + name + " repeats a point");
        }
    };
    check(xs, "X1");
    check(ys, "X2");
    PointConfig config;
    config.provenance = Provenance::grid;
    for (const auto& x : xs)
        for (const auto& y : ys) config.points.push_back({x, y});
    config.distinct_rules = have_distinct_rules(config);
    return config;
}

nlohmann::json rational_to_json(const mpq_class& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

mpq_class parse_rational(const nlohmann::json& j)
{
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) {
        mpq_class q;
        if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
            throw InvalidInput("cannot parse rational '" + j.get<std::string>() + "'");
        q.canonicalize();
        return q;
    }
    throw InvalidInput("coordinates must be integers or \"p/q\" strings");
}

P1Point parse_p1(const std::string& text)
{
    if (text == "inf" || text == "infinity") return P1Point::infinity();
    return P1Point::affine(parse_rational(nlohmann::json(text)));
}

nlohmann::json to_json(const PointConfig& config)
{
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : config.points)
        pts.push_back({{rational_to_json(p.x.x0), rational_to_json(p.x.x1)},
                       {rational_to_json(p.y.x0), rational_to_json(p.y.x1)}});
    nlohmann::json j{{"s", config.s()}, {"points", pts}, {"provenance", to_string(config.provenance)}};
    j["seed"] = config.seed ? nlohmann::json(*config.seed) : nlohmann::json(nullptr);
    return j;
}

PointConfig config_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw InvalidInput("point configuration must be an object with a \"points\" array");
    PointConfig config;
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_array() || p[0].size() != 2 || !p[1].is_array() ||
            p[1].size() != 2)
            throw InvalidInput("each point must be [[a0,a1],[b0,b1]]");
        config.points.push_back({{parse_rational(p[0][0]), parse_rational(p[0][1])},
                                 {parse_rational(p[1][0]), parse_rational(p[1][1])}});
    }
    if (j.contains("s") && j["s"].get<int>() != config.s())
        throw InvalidInput("declared s does not match the number of points");
    if (j.contains("provenance")) config.provenance = provenance_from_string(j["provenance"].get<std::string>());
    if (j.contains("seed") && !j["seed"].is_null()) config.seed = j["seed"].get<std::uint64_t>();
    validate(config);
    return config;
}

} // namespace p1p1::fat
