#include "totred/cli/spec_io.hpp"

#include "totred/errors.hpp"

#include <fstream>
#include <sstream>

namespace totred::cli {

using nlohmann::json;

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
    std::size_t line = 1;
    for (std::size_t p = 0; p < offset && p < text.size(); ++p) {
        if (text[p] == '\n') ++line;
    }
    return line;
}

const json& require(const json& obj, const char* key, const std::string& field)
{
    auto it = obj.find(key);
    if (it == obj.end()) throw SpecError("missing field", field + "/" + key);
    return *it;
}

long integer_from_json(const json& j, const std::string& field)
{
    if (!j.is_number_integer()) throw SpecError("expected an integer", field);
    return j.get<long>();
}

std::size_t positive_from_json(const json& j, const std::string& field)
{
    const long v = integer_from_json(j, field);
    if (v < 1) throw SpecError("expected a positive integer", field);
    return static_cast<std::size_t>(v);
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& field)
{
    if (!j.is_array()) throw SpecError("expected an array of rational literals", field);
    std::vector<Rational> out;
    out.reserve(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) out.push_back(rational_from_json(j[r], field + "/" + std::to_string(r)));
    return out;
}

ElementColumn column_from_json(const json& j, std::size_t n, const std::string& field)
{
    if (!j.is_array()) throw SpecError("expected an array of elements", field);
    if (j.size() != n) {
        throw SpecError("expected " + std::to_string(n) + " elements, got " + std::to_string(j.size()), field);
    }
    std::vector<OperatorElement> entries;
    for (std::size_t r = 0; r < n; ++r) entries.push_back(element_from_json(j[r], field + "/" + std::to_string(r)));
    try {
        return ElementColumn(std::move(entries));
    } catch (const HeterogeneousColumnError& e) {
        throw SpecError(e.what(), field);
    }
}

} // namespace

SpecError::SpecError(const std::string& message, std::string field, std::optional<std::size_t> line)
    : std::runtime_error(message), field_(std::move(field)), line_(line)
{
}

Rational rational_from_json(const json& j, const std::string& field)
{
    if (!j.is_string()) throw SpecError("expected a rational literal string such as \"-3/7\"", field);
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const DomainError& e) {
        throw SpecError(e.what(), field);
    }
}

OperatorElement element_from_json(const json& j, const std::string& field)
{
    if (j.is_string()) return OperatorElement::constant(rational_from_json(j, field));
    if (!j.is_object()) throw SpecError("expected a literal, {\"polynomial\": ...} or {\"sequence\": ...}", field);
    if (j.contains("polynomial")) return OperatorElement::polynomial(rationals_from_json(j["polynomial"], field + "/polynomial"));
    if (j.contains("sequence")) {
        long origin = 0;
        if (j.contains("origin")) origin = integer_from_json(j["origin"], field + "/origin");
        std::vector<Rational> values = rationals_from_json(j["sequence"], field + "/sequence");
        if (values.empty()) throw SpecError("a sequence needs at least one value", field + "/sequence");
        return OperatorElement::sequence(origin, std::move(values));
    }
    throw SpecError("element object needs a \"polynomial\" or \"sequence\" key", field);
}

SystemSpec parse_spec(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SpecError(e.what(), "", line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object()) throw SpecError("top level must be an object", "");

    SystemSpec spec;
    const long n = integer_from_json(require(doc, "n", ""), "/n");
    if (n < 1) throw SpecError("n must be at least 1", "/n");
    spec.n = static_cast<std::size_t>(n);

    const json& rows = require(doc, "matrix", "");
    if (!rows.is_array() || rows.size() != spec.n) {
        throw SpecError("matrix must have " + std::to_string(spec.n) + " rows", "/matrix");
    }
    std::vector<Rational> entries;
    for (std::size_t r = 0; r < spec.n; ++r) {
        const std::string field = "/matrix/" + std::to_string(r);
        std::vector<Rational> row = rationals_from_json(rows[r], field);
        if (row.size() != spec.n) throw SpecError("row must have " + std::to_string(spec.n) + " entries", field);
        entries.insert(entries.end(), row.begin(), row.end());
    }
    spec.matrix = Matrix(spec.n, spec.n, std::move(entries));

    const json& op = require(doc, "operator", "");
    if (!op.is_string()) throw SpecError("operator must be \"shift\", \"derivative\" or \"zero\"", "/operator");
    const auto kind = parse_operator_kind(op.get<std::string>());
    if (!kind) throw SpecError("unknown operator '" + op.get<std::string>() + "'", "/operator");
    spec.kind = *kind;

    spec.phi = column_from_json(require(doc, "phi", ""), spec.n, "/phi");
    if (spec.kind == OperatorKind::derivative && spec.phi[0].is_sequence()) {
        throw SpecError("the derivative operator needs polynomial elements", "/phi");
    }

    if (doc.contains("initial")) {
        const json& init = doc["initial"];
        if (!init.is_object()) throw SpecError("expected an object", "/initial");
        InitialData data;
        if (init.contains("t0")) data.t0 = integer_from_json(init["t0"], "/initial/t0");
        data.x0 = rationals_from_json(require(init, "x0", "/initial"), "/initial/x0");
        if (data.x0.size() != spec.n) throw SpecError("x0 must have " + std::to_string(spec.n) + " entries", "/initial/x0");
        spec.initial = std::move(data);
    }
    if (doc.contains("horizon")) spec.horizon = positive_from_json(doc["horizon"], "/horizon");
    if (doc.contains("solution")) {
        spec.solution = column_from_json(doc["solution"], spec.n, "/solution");
        if ((*spec.solution)[0].is_sequence() != spec.phi[0].is_sequence()) {
            throw SpecError("solution and phi must use the same element variant", "/solution");
        }
    }
    return spec;
}

SystemSpec load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path + "'", "");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

ordered_json element_to_json(const OperatorElement& e)
{
    ordered_json out = ordered_json::object();
    if (e.is_polynomial()) {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : e.as_polynomial().coeffs) coeffs.push_back(c.to_string());
        out["polynomial"] = std::move(coeffs);
        return out;
    }
    ordered_json values = ordered_json::array();
    for (const auto& v : e.as_sequence().values) values.push_back(v.to_string());
    out["sequence"] = std::move(values);
    out["origin"] = e.origin();
    return out;
}

ordered_json column_to_json(const Column& c)
{
    ordered_json out = ordered_json::array();
    for (const auto& v : c) out.push_back(v.to_string());
    return out;
}

} // namespace totred::cli
