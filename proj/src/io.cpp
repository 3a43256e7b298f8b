#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric::io {

using nlohmann::json;

LatticePolytope read_polytope_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw input_error(std::string("polytope: malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw input_error("polytope: expected an object with a \"vertices\" array");
    std::vector<LatticePoint> pts;
    for (const auto& row : doc["vertices"]) {
        if (!row.is_array() || row.empty())
            throw input_error("polytope: each vertex must be a nonempty array");
        LatticePoint p;
        p.reserve(row.size());
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw input_error("polytope: vertex coordinates must be integers");
            p.emplace_back(x.get<long long>());
        }
        pts.push_back(std::move(p));
    }
    return LatticePolytope(std::move(pts));
}

LatticePolytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open polytope file: " + path);
    return read_polytope_json(in);
}

GaloisField parse_field_spec(const std::string& spec, const Guards& guards) {
    auto parse_ll = [&](const std::string& s) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw input_error("field spec: expected an integer in \"" + spec + "\"");
        }
        if (pos != s.size()) throw input_error("field spec: trailing characters in \"" + spec + "\"");
        return v;
    };
    if (spec.rfind("q=", 0) == 0) {
        long long q = parse_ll(spec.substr(2));
        auto [p, m] = factor_prime_power(q);
        return GaloisField(p, m, guards);
    }
    if (spec.rfind("p=", 0) == 0) {
        auto comma = spec.find(",m=");
        if (comma == std::string::npos)
            throw input_error("field spec: expected \"p=<int>,m=<int>\", got \"" + spec + "\"");
        long long p = parse_ll(spec.substr(2, comma - 2));
        long long m = parse_ll(spec.substr(comma + 3));
        if (m < 1 || m > 16) throw input_error("field spec: extension degree out of range");
        return GaloisField(p, static_cast<int>(m), guards);
    }
    throw input_error("field spec: expected \"q=<int>\" or \"p=<int>,m=<int>\", got \"" + spec + "\"");
}

std::string genmat_text(const ToricCode& code, bool as_logs) {
    std::ostringstream out;
    out << "q=" << code.field().q() << " r=" << code.r() << " n=" << code.n() << " k=" << code.k()
        << "\n";
    for (long long i = 0; i < code.k(); ++i) {
        for (long long j = 0; j < code.n(); ++j) {
            if (j) out << ' ';
            if (as_logs)
                out << code.field().log(code.at(i, j));
            else
                out << code.at(i, j).enc;
        }
        out << "\n";
    }
    return out.str();
}

json report_to_json(const DistanceReport& report) {
    json j;
    j["n"] = report.n;
    j["k"] = report.k;
    if (report.exact) j["exact"] = *report.exact;
    if (report.lower_bound) j["lower_bound"] = *report.lower_bound;
    if (report.upper_bound) j["upper_bound"] = *report.upper_bound;
    j["trivial_lower"] = report.trivial_lower;
    json w = json::object();
    if (!report.lower_levels.empty()) {
        json levels = json::array();
        for (const auto& lv : report.lower_levels)
            levels.push_back({{"level", lv.level}, {"a", lv.a}, {"m", lv.m}});
        w["lower"] = levels;
    }
    if (report.upper_witness)
        w["upper"] = {{"anchor", report.upper_witness->anchor},
                      {"lengths", report.upper_witness->lengths}};
    j["witnesses"] = w;
    return j;
}

}  // namespace toric::io
