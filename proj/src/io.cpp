#include "svf/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace svf {

using nlohmann::json;

namespace {

json curve_to_json(const BoundaryCurve& c) {
    json j;
    j["interval"] = {c.lo, c.hi};
    auto spline_json = [](const CubicSpline& s) {
        json pieces = json::array();
        for (const auto& p : s.pieces()) pieces.push_back({p.c0, p.c1, p.c2, p.c3});
        return json{{"knots", s.knots()}, {"pieces", pieces}};
    };
    auto singular_json = [](const SingularExpansion& e) {
        return json{{"origin", e.origin}, {"side", e.side == Side::left ? "left" : "right"}, {"coeffs", e.coeffs}};
    };
    switch (c.kind) {
        case CurveKind::polynomial:
            j["kind"] = "polynomial";
            j["nodes"] = c.poly.nodes();
            j["values"] = c.poly.values();
            j["weights"] = c.poly.weights();
            break;
        case CurveKind::spline:
            j["kind"] = "spline";
            j["spline"] = spline_json(c.spline);
            break;
        case CurveKind::spline_plus_singular:
            j["kind"] = "spline_plus_singular";
            j["spline"] = spline_json(c.spline);
            j["p"] = singular_json(c.p);
            j["q"] = singular_json(c.q);
            break;
    }
    return j;
}

CubicSpline spline_from_json(const json& j) {
    std::vector<CubicSpline::Piece> pieces;
    for (const auto& p : j.at("pieces")) {
        if (p.size() != 4) throw DomainError("spline piece must have 4 coefficients");
        pieces.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>(), p[3].get<double>()});
    }
    auto knots = j.at("knots").get<std::vector<double>>();
    if (knots.size() != pieces.size() + 1) throw DomainError("spline record: knot/piece count mismatch");
    return CubicSpline(std::move(knots), std::move(pieces));
}

SingularExpansion singular_from_json(const json& j) {
    SingularExpansion e;
    e.origin = j.at("origin").get<double>();
    const auto side = j.at("side").get<std::string>();
    if (side != "left" && side != "right") throw DomainError("singular record: side must be left or right");
    e.side = side == "left" ? Side::left : Side::right;
    e.coeffs = j.at("coeffs").get<std::vector<double>>();
    return e;
}

BoundaryCurve curve_from_json(const json& j) {
    const auto interval = j.at("interval").get<std::vector<double>>();
    if (interval.size() != 2) throw DomainError("curve record: interval must have 2 entries");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "polynomial") {
        PolyInterpolant p(j.at("nodes").get<std::vector<double>>(), j.at("values").get<std::vector<double>>(),
                          j.at("weights").get<std::vector<double>>());
        return BoundaryCurve::polynomial(std::move(p), interval[0], interval[1]);
    }
    if (kind == "spline") return BoundaryCurve::cubic_spline(spline_from_json(j.at("spline")), interval[0], interval[1]);
    if (kind == "spline_plus_singular") {
        return BoundaryCurve::singular(spline_from_json(j.at("spline")), singular_from_json(j.at("p")),
                                       singular_from_json(j.at("q")), interval[0], interval[1]);
    }
    throw DomainError("curve record: unknown kind '" + kind + "'");
}

json point_json(Point2 p) { return json::array({p.first, p.second}); }

Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("point must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string sample_set_to_json(const SampleSet& samples) {
    json values = json::array();
    for (const CompactSet& v : samples.values) {
        json sets = json::array();
        for (const Interval& iv : v.intervals()) sets.push_back({iv.lo, iv.hi});
        values.push_back(sets);
    }
    json j{{"a", samples.a}, {"b", samples.b}, {"nodes", samples.partition.nodes}, {"values", values}};
    if (samples.partition.kind == PartitionKind::chebyshev) j["partition"] = "chebyshev";
    if (samples.partition.kind == PartitionKind::uniform) j["partition"] = "uniform";
    return j.dump(2) + "\n";
}

SampleSet sample_set_from_json(std::string_view text) {
    return guarded([&] {
        const json j = json::parse(text);
        SampleSet s;
        s.a = j.at("a").get<double>();
        s.b = j.at("b").get<double>();
        if (!(s.a < s.b)) throw DomainError("sample file: need a < b");
        s.partition.nodes = j.at("nodes").get<std::vector<double>>();
        const std::string kind = j.value("partition", std::string("general"));
        s.partition.kind = kind == "chebyshev" ? PartitionKind::chebyshev
                           : kind == "uniform" ? PartitionKind::uniform
                                               : PartitionKind::general;
        for (const auto& node : j.at("values")) {
            std::vector<Interval> ivs;
            for (const auto& iv : node) {
                if (!iv.is_array() || iv.size() != 2) throw DomainError("sample file: interval must be [lo, hi]");
                ivs.push_back({iv[0].get<double>(), iv[1].get<double>()});
            }
            s.values.emplace_back(std::move(ivs));
        }
        s.check();
        for (double x : s.partition.nodes) {
            if (x < s.a || x > s.b) throw DomainError("sample file: node outside [a, b]");
        }
        return s;
    });
}

std::string approximant_to_json(const Approximant& A) {
    json holes = json::array();
    for (const ApproxHole& h : A.holes) {
        holes.push_back({{"c", h.c},
                         {"d", h.d},
                         {"c_ext", h.c_ext},
                         {"d_ext", h.d_ext},
                         {"pct_left", point_json(h.pct_left)},
                         {"pct_right", point_json(h.pct_right)},
                         {"flagged", h.flagged},
                         {"lower", curve_to_json(h.lower)},
                         {"upper", curve_to_json(h.upper)}});
    }
    json j{{"method", to_string(A.method)},
           {"params", {{"N", A.n}, {"delta", A.delta}, {"k", A.k}, {"r", A.r}, {"s", A.s}}},
           {"a", A.a},
           {"b", A.b},
           {"curves", {{"ell", curve_to_json(A.ell)}, {"u", curve_to_json(A.u)}}},
           {"holes", holes},
           {"warnings", A.warnings}};
    return j.dump(2) + "\n";
}

Approximant approximant_from_json(std::string_view text) {
    return guarded([&] {
        const json j = json::parse(text);
        Approximant A;
        A.method = parse_method(j.at("method").get<std::string>());
        const json& p = j.at("params");
        A.n = p.at("N").get<std::size_t>();
        A.delta = p.at("delta").get<double>();
        A.k = p.value("k", std::size_t{0});
        A.r = p.value("r", std::size_t{0});
        A.s = p.value("s", std::size_t{3});
        A.a = j.at("a").get<double>();
        A.b = j.at("b").get<double>();
        A.ell = curve_from_json(j.at("curves").at("ell"));
        A.u = curve_from_json(j.at("curves").at("u"));
        for (const auto& h : j.at("holes")) {
            ApproxHole hole;
            hole.c = h.at("c").get<double>();
            hole.d = h.at("d").get<double>();
            hole.c_ext = h.at("c_ext").get<double>();
            hole.d_ext = h.at("d_ext").get<double>();
            hole.pct_left = point_from_json(h.at("pct_left"));
            hole.pct_right = point_from_json(h.at("pct_right"));
            hole.flagged = h.value("flagged", false);
            hole.lower = curve_from_json(h.at("lower"));
            hole.upper = curve_from_json(h.at("upper"));
            A.holes.push_back(std::move(hole));
        }
        if (j.contains("warnings")) A.warnings = j.at("warnings").get<std::vector<std::string>>();
        return A;
    });
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw DomainError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw DomainError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace svf
