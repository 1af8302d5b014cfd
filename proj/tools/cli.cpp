#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>

#include <orthogen/classify.hpp>
#include <orthogen/families.hpp>
#include <orthogen/favard.hpp>
#include <orthogen/genfun.hpp>
#include <orthogen/json_io.hpp>
#include <orthogen/orthocheck.hpp>

namespace orthogen::cli {

namespace {

using json::Json;

enum class Format { json, csv, text };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failure with a structured payload for the error stream and exit code 2.
struct DomainFailure {
    Json payload;
};

struct Options {
    std::string format = "json";
    bool approx = false;
    std::string input;

    std::string rule;
    std::string a, b, c, values;
    std::string alpha;
    std::size_t order = 12;

    std::string family;
    std::string lambda;

    std::string betas, omegas;
};

Rational rational_flag(const std::string& value, const char* name)
{
    if (value.empty())
        throw UsageError(std::string("missing --") + name);
    try {
        return parse_rational(value);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--") + name + ": " + e.what());
    }
}

std::vector<Rational> rational_list(const std::string& value, const char* name)
{
    if (value.empty())
        throw UsageError(std::string("missing --") + name);
    std::vector<Rational> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(rational_flag(item, name));
    return out;
}

Json read_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open input file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("invalid JSON in '" + path + "': " + e.what());
    }
}

CoeffRule rule_from_flags(const Options& o)
{
    if (o.rule.empty())
        throw UsageError("missing --rule");
    CoeffRule rule;
    if (o.rule == "abc") {
        // Decode into locals so a throwing flag cannot leak earlier members.
        Rational a = rational_flag(o.a, "a");
        Rational b = rational_flag(o.b, "b");
        Rational c = rational_flag(o.c, "c");
        rule = AbcRule{std::move(a), std::move(b), std::move(c)};
    } else if (o.rule == "explicit")
        rule = ExplicitRule{rational_list(o.values, "values")};
    else if (o.rule == "named:exp")
        rule = NamedRule{NamedKind::exp, rational_flag(o.a, "a")};
    else if (o.rule == "named:geometric")
        rule = NamedRule{NamedKind::geometric, rational_flag(o.b, "b")};
    else if (o.rule == "named:log")
        rule = NamedRule{NamedKind::log, rational_flag(o.b, "b")};
    else
        throw UsageError("unknown --rule '" + o.rule + "'");
    try {
        validate(rule);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return rule;
}

GFSpec spec_from(const Options& o)
{
    if (!o.input.empty())
        return json::decode_gfspec(read_input(o.input));
    return GFSpec{rule_from_flags(o), rational_flag(o.alpha, "alpha"), o.order};
}

FamilyId family_from(const Options& o)
{
    FamilyKind kind;
    try {
        kind = parse_family_kind(o.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (kind == FamilyKind::ultraspherical)
        return FamilyId::ultraspherical(rational_flag(o.lambda, "lambda"));
    return FamilyId{kind, Rational(0)};
}

MonicFamily expand_or_fail(const GFSpec& spec)
{
    try {
        return expand(spec);
    } catch (const ZeroCoefficientError& e) {
        throw DomainFailure{Json{{"error", "zero_coefficient"}, {"index", e.index()}}};
    }
}

Recursion fit_or_fail(const MonicFamily& family)
{
    try {
        return fit(family);
    } catch (const NotThreeTermError& e) {
        throw DomainFailure{Json{{"error", "not_three_term"}, {"index", e.index()}}};
    }
}

// --- rendering ---------------------------------------------------------------

std::string csv_cell(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out += (i ? ";" : "") + csv_cell(v[i]);
        return out;
    }
    return v.dump();
}

// Flat object as a header row of keys and one row of values.
void write_flat_csv(const Json& obj, std::ostream& out)
{
    std::string keys, values;
    bool first = true;
    for (const auto& [k, v] : obj.items()) {
        if (v.is_object())
            continue;
        keys += (first ? "" : ",") + k;
        values += (first ? "" : ",") + csv_cell(v);
        first = false;
    }
    out << keys << '\n' << values << '\n';
}

void write_flat_text(const Json& obj, std::ostream& out)
{
    for (const auto& [k, v] : obj.items()) {
        if (v.is_object())
            continue;
        out << k << ": " << csv_cell(v) << '\n';
    }
}

void write_flat(const Json& obj, Format fmt, std::ostream& out)
{
    switch (fmt) {
    case Format::json: out << obj.dump() << '\n'; break;
    case Format::csv: write_flat_csv(obj, out); break;
    case Format::text: write_flat_text(obj, out); break;
    }
}

void write_family(const MonicFamily& family, Format fmt, std::ostream& out)
{
    const std::size_t order = family.order();
    switch (fmt) {
    case Format::json: {
        Json j{{"order", order}};
        j["polys"] = json::encode(family)["polys"];
        out << j.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "n";
        for (std::size_t k = 0; k <= order; ++k)
            out << ",x^" << k;
        out << '\n';
        for (std::size_t n = 0; n <= order; ++n) {
            out << n;
            for (std::size_t k = 0; k <= order; ++k)
                out << ',' << to_string(family[n].coeff(k));
            out << '\n';
        }
        break;
    case Format::text:
        for (std::size_t n = 0; n <= order; ++n)
            out << "P_" << n << " = " << to_display_string(family[n]) << '\n';
        break;
    }
}

void write_recursion(const Recursion& rec, Format fmt, std::ostream& out)
{
    switch (fmt) {
    case Format::json:
        out << json::encode(rec).dump() << '\n';
        break;
    case Format::csv:
        out << "n,beta,omega\n";
        for (std::size_t n = 0; n < rec.order(); ++n)
            out << n << ',' << to_string(rec.beta(n)) << ',' << (n ? to_string(rec.omega(n)) : "")
                << '\n';
        break;
    case Format::text:
        for (std::size_t n = 0; n < rec.order(); ++n) {
            out << "beta_" << n << " = " << to_string(rec.beta(n));
            if (n)
                out << ", omega_" << n << " = " << to_string(rec.omega(n));
            out << '\n';
        }
        break;
    }
}

int write_verdict(const Verdict& v, const Options& o, Format fmt, std::ostream& out)
{
    Json j = json::encode(v);
    if (o.approx && is_accepted(v)) {
        Json approx = Json::object();
        for (const auto& [k, val] : j.items())
            if (k != "family")
                approx[k] = to_approx_string(parse_rational(val.get<std::string>()));
        j["approx"] = std::move(approx);
    }
    write_flat(j, fmt, out);
    return is_accepted(v) ? kExitOk : kExitRejected;
}

// --- subcommands -------------------------------------------------------------

int cmd_expand(const Options& o, Format fmt, std::ostream& out)
{
    write_family(expand_or_fail(spec_from(o)), fmt, out);
    return kExitOk;
}

int cmd_fit(const Options& o, Format fmt, std::ostream& out)
{
    std::optional<MonicFamily> family;
    if (!o.input.empty()) {
        const Json j = read_input(o.input);
        family = j.contains("polys") ? json::decode_family(j) : expand_or_fail(json::decode_gfspec(j));
    } else {
        family = expand_or_fail(spec_from(o));
    }
    write_recursion(fit_or_fail(*family), fmt, out);
    return kExitOk;
}

int cmd_classify(const Options& o, Format fmt, std::ostream& out)
{
    const GFSpec spec = spec_from(o);
    if (spec.order < 5)
        throw UsageError("classify needs --order >= 5");
    return write_verdict(classify(spec.rule, spec.alpha, spec.order), o, fmt, out);
}

int cmd_identify(const Options& o, Format fmt, std::ostream& out)
{
    const Recursion rec = !o.input.empty()
        ? json::decode_recursion(read_input(o.input))
        : Recursion(rational_list(o.betas, "betas"), rational_list(o.omegas, "omegas"));
    if (rec.order() < 4)
        throw UsageError("identify needs omega_1 ... omega_3");
    return write_verdict(identify_from_recursion(rec, rational_flag(o.alpha, "alpha")), o, fmt, out);
}

int cmd_verify(const Options& o, Format fmt, std::ostream& out)
{
    std::optional<MonicFamily> family;
    std::optional<Recursion> rec;
    if (!o.family.empty()) {
        rec = recursion_of(family_from(o), o.order + 1);
        family = polys_from_recursion(*rec, o.order);
    } else {
        GFSpec spec = spec_from(o);
        if (spec.order < 2)
            throw UsageError("verify needs --order >= 2");
        // One extra step supplies omega_N for the norm of P_N.
        const std::size_t order = spec.order;
        spec.order += 1;
        const MonicFamily longer = expand_or_fail(spec);
        rec = fit_or_fail(longer);
        family = longer.truncated(order);
    }
    const OrthogonalityReport report = verify_orthogonality(*family, *rec);
    write_flat(json::encode(report), fmt, out);
    return report.pass ? kExitOk : kExitRejected;
}

int cmd_table(const Options& o, Format fmt, std::ostream& out)
{
    if (o.order < 2)
        throw UsageError("table needs --order >= 2");
    const FamilyId id = family_from(o);
    const Recursion rec = recursion_of(id, o.order);
    const MonicFamily family = polys_from_recursion(rec, o.order);
    const MomentSeq mom = moments_from_recursion(rec, 2 * o.order - 1);

    switch (fmt) {
    case Format::json: {
        Json j = json::encode(id);
        j["order"] = o.order;
        j["recursion"] = json::encode(rec);
        j["polys"] = json::encode(family)["polys"];
        j["moments"] = json::encode(mom);
        out << j.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "kind,n,value\n";
        for (std::size_t n = 0; n < rec.order(); ++n)
            out << "beta," << n << ',' << to_string(rec.beta(n)) << '\n';
        for (std::size_t n = 1; n < rec.order(); ++n)
            out << "omega," << n << ',' << to_string(rec.omega(n)) << '\n';
        for (std::size_t n = 0; n < family.size(); ++n)
            out << "poly," << n << ',' << csv_cell(json::encode(family[n])) << '\n';
        for (std::size_t k = 0; k < mom.moments.size(); ++k)
            out << "moment," << k << ',' << to_string(mom[k]) << '\n';
        break;
    case Format::text:
        out << "family: " << family_name(id.kind);
        if (id.kind == FamilyKind::ultraspherical)
            out << " (lambda " << to_string(id.lambda) << ')';
        out << '\n';
        write_recursion(rec, fmt, out);
        write_family(family, fmt, out);
        for (std::size_t k = 0; k < mom.moments.size(); ++k)
            out << "m_" << k << " = " << to_string(mom[k]) << '\n';
        break;
    }
    return kExitOk;
}

Format parse_format(const std::string& s)
{
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    if (s == "text")
        return Format::text;
    throw UsageError("unknown --format '" + s + "'");
}

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "json | csv | text");
    sub->add_flag("--approx", o.approx, "append decimal renderings of exact values");
    sub->add_option("--input", o.input, "JSON input file");
}

void add_rule_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--rule", o.rule, "abc | explicit | named:exp | named:geometric | named:log");
    sub->add_option("--a", o.a, "rule parameter a (p/q)");
    sub->add_option("--b", o.b, "rule parameter b (p/q)");
    sub->add_option("--c", o.c, "rule parameter c (p/q)");
    sub->add_option("--values", o.values, "explicit coefficients, comma separated");
    sub->add_option("--alpha", o.alpha, "alpha in F(xz - alpha z^2)");
    sub->add_option("--order", o.order, "truncation order N")->capture_default_str();
}

void add_family_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--family", o.family,
                    "hermite | charlier | legendre | ultraspherical | chebyshev_t | chebyshev_u");
    sub->add_option("--lambda", o.lambda, "ultraspherical parameter (p/q)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact expansion and classification of F(xz - alpha z^2) generating functions",
                 "orthogen"};
    app.require_subcommand(1);

    Options o;
    auto* expand_cmd = app.add_subcommand("expand", "polynomial table P_0 ... P_N");
    auto* fit_cmd = app.add_subcommand("fit", "three-term recursion of a family");
    auto* classify_cmd = app.add_subcommand("classify", "decide orthogonality from a coefficient rule");
    auto* identify_cmd = app.add_subcommand("identify", "name the family behind a recursion");
    auto* verify_cmd = app.add_subcommand("verify", "exact Gram-matrix orthogonality report");
    auto* table_cmd = app.add_subcommand("table", "reference recursion, polynomials and moments");

    for (auto* sub : {expand_cmd, fit_cmd, classify_cmd, identify_cmd, verify_cmd, table_cmd})
        add_common(sub, o);
    for (auto* sub : {expand_cmd, fit_cmd, classify_cmd, verify_cmd})
        add_rule_flags(sub, o);
    for (auto* sub : {verify_cmd, table_cmd})
        add_family_flags(sub, o);
    table_cmd->add_option("--order", o.order, "truncation order N")->capture_default_str();
    identify_cmd->add_option("--alpha", o.alpha, "alpha in F(xz - alpha z^2)");
    identify_cmd->add_option("--betas", o.betas, "beta_0 ... beta_{N-1}, comma separated");
    identify_cmd->add_option("--omegas", o.omegas, "omega_1 ... omega_{N-1}, comma separated");

    auto usage_error = [&](const std::string& message) {
        err << Json{{"error", "usage"}, {"message", message}}.dump() << '\n';
        return kExitUsage;
    };

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    try {
        const Format fmt = parse_format(o.format);
        if (expand_cmd->parsed())
            return cmd_expand(o, fmt, out);
        if (fit_cmd->parsed())
            return cmd_fit(o, fmt, out);
        if (classify_cmd->parsed())
            return cmd_classify(o, fmt, out);
        if (identify_cmd->parsed())
            return cmd_identify(o, fmt, out);
        if (verify_cmd->parsed())
            return cmd_verify(o, fmt, out);
        return cmd_table(o, fmt, out);
    } catch (const DomainFailure& f) {
        err << f.payload.dump() << '\n';
        return kExitRejected;
    } catch (const UsageError& e) {
        return usage_error(e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const nlohmann::json::exception& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
        return kExitUsage;
    }
}

} // namespace orthogen::cli
