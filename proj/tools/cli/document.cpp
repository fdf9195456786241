#include "cli/document.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include <json.hpp>

#include "lfca/error.hpp"

namespace lfca::cli {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw DocumentError(field + ": " + message);
}

const json& member(const json& obj, const char* key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path + key, "missing field");
    return *it;
}

double number(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
}

Point point(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) fail(field, "expected [x, y]");
    return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

FractalSeries series(const json& terms, Alpha alpha, Point center, const std::string& field) {
    if (!terms.is_array()) fail(field, "expected an array of terms");
    std::vector<std::pair<int, FractalComplex>> items;
    std::set<int> seen;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string path = field + "[" + std::to_string(i) + "]";
        const json& t = terms[i];
        if (!t.is_object()) fail(path, "expected an object");
        const json& k = member(t, "k", path + ".");
        if (!k.is_number_integer()) fail(path + ".k", "expected an integer");
        const auto kv = k.get<long long>();
        if (kv < -100000 || kv > 100000) fail(path + ".k", "exponent out of range");
        const int key = static_cast<int>(kv);
        if (!seen.insert(key).second) fail(path + ".k", "duplicate key k=" + std::to_string(key));
        const double re = number(member(t, "re", path + "."), path + ".re");
        const double im = t.contains("im") ? number(t["im"], path + ".im") : 0.0;
        items.emplace_back(key, FractalComplex{re, im});
    }
    if (items.empty()) return FractalSeries::zero(alpha, center);
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const int kmin = items.front().first;
    std::vector<FractalComplex> coeffs(static_cast<std::size_t>(items.back().first - kmin + 1));
    for (const auto& [k, c] : items) coeffs[static_cast<std::size_t>(k - kmin)] = c;
    return {alpha, center, kmin, std::move(coeffs)};
}

int line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

ordered_json terms_json(const FractalSeries& f) {
    ordered_json terms = ordered_json::array();
    for (int k = f.kmin(); k <= f.kmax(); ++k) {
        const FractalComplex c = f.coeff(k);
        if (c.is_zero()) continue;
        terms.push_back(ordered_json{{"k", k}, {"re", c.re}, {"im", c.im}});
    }
    return terms;
}

ordered_json point_json(Point p) { return ordered_json::array({p.x, p.y}); }

}  // namespace

ParsedFunction parse_series(std::string_view text, std::optional<double> alpha_override) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                            ": malformed JSON (" + e.what() + ")");
    }
    if (!doc.is_object()) fail("document", "expected a JSON object");

    double a = number(member(doc, "alpha", ""), "alpha");
    if (alpha_override) a = *alpha_override;
    if (!(a > 0.0 && a <= 1.0)) fail("alpha", "must lie in (0, 1], got " + std::to_string(a));
    const Alpha alpha(a);
    const Point center = doc.contains("center") ? point(doc["center"], "center") : Point{};
    const FractalSeries main = series(member(doc, "terms", ""), alpha, center, "terms");

    if (!doc.contains("poles")) return main;
    const json& poles = doc["poles"];
    if (!poles.is_array()) fail("poles", "expected an array");
    std::vector<PolePart> parts;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const std::string path = "poles[" + std::to_string(i) + "]";
        const json& p = poles[i];
        if (!p.is_object()) fail(path, "expected an object");
        const Point loc = point(member(p, "location", path + "."), path + ".location");
        FractalSeries principal = series(member(p, "terms", path + "."), alpha, loc, path + ".terms");
        if (principal.is_zero() || principal.kmax() > -1) fail(path + ".terms", "principal part needs only k <= -1");
        parts.push_back({loc, std::move(principal)});
    }
    if (main.kmin() < 0) fail("terms", "the Taylor part of a multi-pole document needs k >= 0");
    return MultiPoleFunction(alpha, std::move(parts), main);
}

std::string serialize_series(const FractalSeries& f) {
    ordered_json doc;
    doc["alpha"] = f.alpha().value();
    doc["center"] = point_json(f.center());
    doc["terms"] = terms_json(f);
    return doc.dump(2) + "\n";
}

std::string serialize_series(const MultiPoleFunction& f) {
    ordered_json doc;
    doc["alpha"] = f.alpha().value();
    doc["center"] = point_json(f.entire().center());
    doc["terms"] = terms_json(f.entire());
    ordered_json poles = ordered_json::array();
    for (const auto& p : f.poles()) {
        poles.push_back(ordered_json{{"location", point_json(p.location)}, {"terms", terms_json(p.principal)}});
    }
    doc["poles"] = std::move(poles);
    return doc.dump(2) + "\n";
}

std::string serialize_series(const ParsedFunction& f) {
    return std::visit([](const auto& v) { return serialize_series(v); }, f);
}

}  // namespace lfca::cli
