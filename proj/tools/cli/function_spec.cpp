#include "function_spec.hpp"

#include "focku/error.hpp"
#include "focku/random.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace focku::cli {

namespace {

using nlohmann::json;

Complex parse_complex(const json& v, const char* field)
{
    auto finite = [&](double x) {
        if (!std::isfinite(x))
            throw InputError(std::string("field '") + field + "' is not finite");
        return x;
    };
    if (v.is_number())
        return {finite(v.get<double>()), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {finite(v[0].get<double>()), finite(v[1].get<double>())};
    if (v.is_object() && v.contains("re") && v["re"].is_number()) {
        const double im = v.contains("im") && v["im"].is_number() ? v["im"].get<double>() : 0.0;
        return {finite(v["re"].get<double>()), finite(im)};
    }
    throw InputError(std::string("field '") + field + "' must be a number, [re, im] or {\"re\", \"im\"}");
}

Complex complex_or(const json& doc, const char* field, Complex fallback)
{
    return doc.contains(field) ? parse_complex(doc[field], field) : fallback;
}

const json& require(const json& doc, const char* field)
{
    if (!doc.contains(field))
        throw InputError(std::string("missing field '") + field + "'");
    return doc[field];
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

} // namespace

const char* kind_name(FunctionSpec::Kind kind)
{
    switch (kind) {
    case FunctionSpec::Kind::Gaussian: return "gaussian";
    case FunctionSpec::Kind::Coeffs: return "coeffs";
    case FunctionSpec::Kind::Basis: return "basis";
    case FunctionSpec::Kind::Random: return "random";
    }
    return "unknown";
}

FunctionSpec parse_function_spec(const json& doc)
{
    if (!doc.is_object())
        throw InputError("function spec must be a JSON object");
    if (doc.contains("schema") && !(doc["schema"].is_number_integer() && doc["schema"].get<int>() == 1))
        throw InputError("unsupported function spec schema (expected 1)");
    const json& kind = require(doc, "kind");
    if (!kind.is_string())
        throw InputError("field 'kind' must be a string");
    const auto k = kind.get<std::string>();

    FunctionSpec spec;
    if (k == "gaussian") {
        spec.kind = FunctionSpec::Kind::Gaussian;
        spec.gaussian.C = complex_or(doc, "C", 1.0);
        spec.gaussian.r = complex_or(doc, "r", 0.0);
        spec.gaussian.s = complex_or(doc, "s", 0.0);
    } else if (k == "coeffs") {
        spec.kind = FunctionSpec::Kind::Coeffs;
        const json& list = require(doc, "coeffs");
        if (!list.is_array() || list.empty())
            throw InputError("field 'coeffs' must be a non-empty array");
        for (const auto& entry : list)
            spec.coeffs.push_back(parse_complex(entry, "coeffs"));
    } else if (k == "basis") {
        spec.kind = FunctionSpec::Kind::Basis;
        const json& n = require(doc, "n");
        if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<long long>() >= 0))
            throw InputError("field 'n' must be a nonnegative integer");
        spec.basis_index = n.get<std::size_t>();
    } else if (k == "random") {
        spec.kind = FunctionSpec::Kind::Random;
        const json& seed = require(doc, "seed");
        if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
            throw InputError("field 'seed' must be an unsigned 64-bit integer");
        spec.seed = seed.get<std::uint64_t>();
        if (doc.contains("degree")) {
            if (!doc["degree"].is_number_integer())
                throw InputError("field 'degree' must be an integer");
            spec.degree = doc["degree"].get<int>();
        }
        const json& decay = require(doc, "decay");
        if (!decay.is_number())
            throw InputError("field 'decay' must be a number");
        spec.decay = decay.get<double>();
        if (!(spec.decay > 0.0 && spec.decay < 1.0))
            throw InputError("field 'decay' must lie in (0, 1)");
    } else {
        throw InputError("unknown function kind '" + k + "'");
    }
    return spec;
}

FunctionSpec parse_function_spec_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return parse_function_spec(doc);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid function spec: ") + e.what());
    }
}

FunctionSpec load_function_spec(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw InputError("cannot open input file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_function_spec_text(text);
}

FockVector materialize(const FunctionSpec& spec, const FockContext& ctx)
{
    const auto trunc = static_cast<std::size_t>(ctx.trunc);
    switch (spec.kind) {
    case FunctionSpec::Kind::Gaussian:
        return gaussian_coeffs_adaptive(spec.gaussian, ctx);
    case FunctionSpec::Kind::Coeffs:
        if (spec.coeffs.size() > trunc + 1) {
            std::ostringstream msg;
            msg << spec.coeffs.size() << " coefficients exceed truncation " << ctx.trunc
                << "; raise --truncation";
            throw InputError(msg.str());
        }
        return FockVector(ctx, spec.coeffs);
    case FunctionSpec::Kind::Basis:
        if (spec.basis_index > trunc)
            throw InputError("basis index exceeds the truncation degree; raise --truncation");
        return FockVector::basis(ctx, spec.basis_index);
    case FunctionSpec::Kind::Random: {
        const int degree = spec.degree < 0 ? ctx.trunc : spec.degree;
        if (degree < 2 || degree > ctx.trunc)
            throw InputError("random degree must lie in [2, truncation]");
        Rng rng(spec.seed);
        return random_vector(ctx, rng, degree, spec.decay);
    }
    }
    throw InputError("unknown function kind");
}

nlohmann::json to_json(const FunctionSpec& spec)
{
    json out;
    out["kind"] = kind_name(spec.kind);
    switch (spec.kind) {
    case FunctionSpec::Kind::Gaussian:
        out["C"] = complex_json(spec.gaussian.C);
        out["r"] = complex_json(spec.gaussian.r);
        out["s"] = complex_json(spec.gaussian.s);
        break;
    case FunctionSpec::Kind::Coeffs: {
        json list = json::array();
        for (const auto& z : spec.coeffs)
            list.push_back(complex_json(z));
        out["coeffs"] = std::move(list);
        break;
    }
    case FunctionSpec::Kind::Basis:
        out["n"] = spec.basis_index;
        break;
    case FunctionSpec::Kind::Random:
        out["seed"] = spec.seed;
        out["degree"] = spec.degree;
        out["decay"] = spec.decay;
        break;
    }
    return out;
}

} // namespace focku::cli
