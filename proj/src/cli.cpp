#include "wps/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wps/asym.hpp"
#include "wps/count.hpp"
#include "wps/manifest.hpp"
#include "wps/point.hpp"
#include "wps/volume.hpp"

namespace wps {

namespace {

using nlohmann::json;

std::string rat_display(Rat const & q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    std::ostringstream os;
    os << std::setprecision(17) << rat_to_double(q);
    return os.str();
}

std::string fmt(double v, int prec = 15)
{
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

std::vector<std::string> split(std::string const & s, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep))
        parts.push_back(tok);
    return parts;
}

std::vector<Weight> weights_from(std::string const & weights,
                                 std::string const & product)
{
    require(weights.empty() != product.empty(),
            "give exactly one of --weights or --product");
    std::vector<Weight> out;
    if (!weights.empty()) {
        out.push_back(parse_weight(weights));
        return out;
    }
    for (auto const & part : split(product, ':'))
        out.push_back(parse_weight(part));
    require(!out.empty(), "empty --product");
    return out;
}

DivisorClass divisor_from(std::string const & spec,
                          std::vector<Weight> const & weights)
{
    if (spec.empty()) {
        if (weights.size() == 1)
            return make_divisor({1});
        return anticanonical_divisor(weights); // products default to -K
    }
    std::vector<Int> a;
    for (auto const & tok : split(spec, ',')) {
        try {
            size_t pos = 0;
            a.push_back(std::stoll(tok, &pos));
            require(pos == tok.size(), "bad divisor entry '" + tok + "'");
        } catch (std::logic_error const &) {
            throw input_error("bad divisor entry '" + tok + "'");
        }
    }
    require(a.size() == weights.size(),
            "divisor length does not match the number of factors");
    return make_divisor(std::move(a));
}

OpenConstraint open_from(std::string const & spec, int factor_1based,
                         std::vector<Weight> const & weights)
{
    // syntax: x<j>!=0 with 1-based j
    require(spec.size() >= 5 && spec[0] == 'x' &&
                spec.substr(spec.size() - 3) == "!=0",
            "bad --open constraint '" + spec + "' (expected x<j>!=0)");
    int j = 0;
    try {
        size_t pos = 0;
        j = std::stoi(spec.substr(1, spec.size() - 4), &pos);
        require(pos == spec.size() - 4, "bad --open constraint '" + spec + "'");
    } catch (std::logic_error const &) {
        throw input_error("bad --open constraint '" + spec + "'");
    }
    require(factor_1based >= 1 &&
                factor_1based <= static_cast<int>(weights.size()),
            "--open-factor out of range");
    Weight const & W = weights[static_cast<size_t>(factor_1based - 1)];
    require(j >= 1 && j <= W.size(), "--open coordinate out of range");
    return {factor_1based - 1, j - 1};
}

ProductMode mode_from(std::string const & mode)
{
    if (mode == "as-printed")
        return ProductMode::factorial;
    if (mode == "lemma-derived")
        return ProductMode::composed;
    throw input_error("bad --mode '" + mode +
                      "' (expected as-printed or lemma-derived)");
}

json class_counts_json(FieldData const & F, CountResult const & res)
{
    json arr = json::array();
    for (auto const & pc : res.per_class)
        arr.push_back({{"class", format_ideal(F, pc.rep)},
                       {"count", pc.count}});
    return arr;
}

/* predicted leading form for a sweep */
AsymptoticForm sweep_form(FieldData const & F,
                          std::vector<Weight> const & weights,
                          DivisorClass const & D, ProductMode mode,
                          double tol)
{
    bool anticanonical = D == anticanonical_divisor(weights);
    if (weights.size() >= 2 && anticanonical &&
        mode == ProductMode::factorial) {
        ConstantValue c = product_constant(F, weights, mode, tol);
        return {c.value, Rat(1), static_cast<Int>(weights.size()) - 1};
    }
    return divisor_asymptotic(F, weights, D, tol);
}

struct CountOptions {
    std::string field = "Q";
    std::string weights, product, divisor;
    std::string T, grid;
    std::string method = "direct";
    std::string mode = "lemma-derived";
    std::string open;
    int open_factor = 1;
    bool classes = false;
    bool as_json = false;
    double tol = 1e-9;
    unsigned long long budget = 1'000'000'000ULL;
    int threads = 0;
};

void add_count_options(CLI::App * cmd, CountOptions & o, bool sweep)
{
    cmd->add_option("--field", o.field, "Q, Q(i) or d=<squarefree>");
    cmd->add_option("--weights", o.weights, "weight tuple w1,w2,...");
    cmd->add_option("--product", o.product,
                    "product factors, e.g. 1,1:1,2");
    cmd->add_option("--divisor", o.divisor,
                    "divisor exponents a1,a2,... (default: 1 for a single "
                    "space, anticanonical for products)");
    if (sweep) {
        cmd->add_option("--grid", o.grid, "geometric grid T0:Tmax:ratio")
            ->required();
        cmd->add_option("--mode", o.mode,
                        "as-printed | lemma-derived (predicted column)");
        cmd->add_option("--tol", o.tol, "tolerance for predicted constants");
    } else {
        cmd->add_option("--T", o.T, "size bound T")->required();
    }
    cmd->add_option("--method", o.method, "direct | moebius");
    cmd->add_option("--open", o.open, "open constraint x<j>!=0 (1-based)");
    cmd->add_option("--open-factor", o.open_factor,
                    "factor of the open constraint (1-based)");
    cmd->add_flag("--classes", o.classes, "print per-ideal-class counts");
    cmd->add_flag("--json", o.as_json, "machine-readable output");
    cmd->add_option("--budget", o.budget, "lattice-visit budget");
    cmd->add_option("--threads", o.threads, "worker cap (0 = hardware)");
}

CountMethod method_from(std::string const & m)
{
    if (m == "direct")
        return CountMethod::direct;
    if (m == "moebius")
        return CountMethod::moebius;
    throw input_error("bad --method '" + m +
                      "' (expected direct or moebius)");
}

RunManifest base_manifest(CountOptions const & o, std::string command,
                          std::vector<Weight> const & weights,
                          DivisorClass const & D)
{
    RunManifest m;
    m.command = std::move(command);
    m.field = o.field;
    for (auto const & W : weights)
        m.weights.push_back(format_weight(W));
    m.divisor = format_divisor(D);
    m.bound = o.T;
    m.grid = o.grid;
    m.method = o.method;
    m.mode = o.mode;
    m.open_constraint = o.open;
    m.open_factor = o.open_factor;
    m.tolerance = o.tol;
    m.budget = o.budget;
    m.threads = o.threads;
    m.per_class = o.classes;
    return m;
}

int cmd_count(CountOptions const & o, std::ostream & out)
{
    FieldData F = make_field(parse_field_spec(o.field));
    auto weights = weights_from(o.weights, o.product);
    DivisorClass D = divisor_from(o.divisor, weights);
    Rat T = parse_decimal_rat(o.T);
    require(T > 0, "--T must be positive");
    CountQuery q;
    q.field = F.tag();
    q.weights = weights;
    q.divisor = D;
    q.bound = T;
    q.method = method_from(o.method);
    if (!o.open.empty())
        q.open_constraint = open_from(o.open, o.open_factor, weights);
    EnumConfig cfg{o.budget, o.threads};
    CountResult res = run_count(F, q, cfg);
    RunManifest man = base_manifest(o, "count", weights, D);
    man.wall_seconds = res.wall_seconds;
    if (o.as_json) {
        json j;
        j["manifest"] = manifest_to_json(man);
        j["result"] = {{"count", res.count},
                       {"wall_seconds", res.wall_seconds}};
        if (o.classes)
            j["result"]["per_class"] = class_counts_json(F, res);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "count = " << res.count << '\n';
    if (o.classes)
        for (auto const & pc : res.per_class)
            out << "  class " << format_ideal(F, pc.rep) << ": " << pc.count
                << '\n';
    return 0;
}

int cmd_sweep(CountOptions const & o, std::ostream & out)
{
    FieldData F = make_field(parse_field_spec(o.field));
    auto weights = weights_from(o.weights, o.product);
    DivisorClass D = divisor_from(o.divisor, weights);
    auto parts = split(o.grid, ':');
    require(parts.size() == 3, "--grid must be T0:Tmax:ratio");
    auto grid = geometric_grid(parse_decimal_rat(parts[0]),
                               parse_decimal_rat(parts[1]),
                               parse_decimal_rat(parts[2]));
    CountQuery q;
    q.field = F.tag();
    q.weights = weights;
    q.divisor = D;
    q.method = method_from(o.method);
    if (!o.open.empty())
        q.open_constraint = open_from(o.open, o.open_factor, weights);
    EnumConfig cfg{o.budget, o.threads};
    AsymptoticForm form =
        sweep_form(F, weights, D, mode_from(o.mode), o.tol);
    CountSeries series = sweep_counts(F, q, grid, cfg);
    RunManifest man = base_manifest(o, "sweep", weights, D);
    double wall = 0;
    for (auto const & row : series.rows)
        wall += row.second.wall_seconds;
    man.wall_seconds = wall;
    if (o.as_json) {
        json rows = json::array();
        for (auto const & [T, res] : series.rows) {
            double t = rat_to_double(T);
            double predicted = evaluate_form(form, t);
            rows.push_back({{"T", rat_display(T)},
                            {"count", res.count},
                            {"predicted", predicted},
                            {"ratio", res.count / predicted}});
        }
        json j;
        j["manifest"] = manifest_to_json(man);
        j["form"] = {{"C", form.C},
                     {"alpha", rat_to_double(form.alpha)},
                     {"beta", form.beta}};
        j["rows"] = rows;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "T,count,predicted,ratio\n";
    for (auto const & [T, res] : series.rows) {
        double t = rat_to_double(T);
        double predicted = evaluate_form(form, t);
        out << rat_display(T) << ',' << res.count << ','
            << fmt(predicted, 10) << ',' << fmt(res.count / predicted, 10)
            << '\n';
    }
    return 0;
}

int cmd_constant(CountOptions const & o, std::ostream & out)
{
    FieldData F = make_field(parse_field_spec(o.field));
    auto weights = weights_from(o.weights, o.product);
    ProductMode mode = mode_from(o.mode);
    ConstantValue c = weights.size() == 1
                          ? space_constant(F, weights[0], o.tol)
                          : product_constant(F, weights, mode, o.tol);
    RunManifest man = base_manifest(o, "constant", weights,
                                    weights.size() == 1
                                        ? make_divisor({weights[0].total()})
                                        : anticanonical_divisor(weights));
    if (o.as_json) {
        json j;
        j["manifest"] = manifest_to_json(man);
        j["result"] = {{"value", c.value},
                       {"error_bound", c.error_bound},
                       {"h", c.parts.h},
                       {"zeta", c.parts.zeta},
                       {"zeta_error", c.parts.zeta_error},
                       {"disc_factor", c.parts.disc_factor},
                       {"unit_factor", c.parts.unit_factor},
                       {"weight_factor", c.parts.weight_factor},
                       {"log_power",
                        static_cast<Int>(weights.size()) - 1}};
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "constant = " << fmt(c.value) << "  (error bound "
        << fmt(c.error_bound, 3) << ")\n";
    if (weights.size() >= 2)
        out << "  growth: C * T * (log T)^" << weights.size() - 1 << "  ["
            << o.mode << "]\n";
    out << "  h             = " << c.parts.h << '\n';
    if (c.parts.zeta != 0)
        out << "  zeta          = " << fmt(c.parts.zeta) << "  (+/- "
            << fmt(c.parts.zeta_error, 3) << ")\n";
    out << "  disc factor   = " << fmt(c.parts.disc_factor) << '\n';
    out << "  unit factor   = " << fmt(c.parts.unit_factor) << '\n';
    out << "  weight factor = " << fmt(c.parts.weight_factor) << '\n';
    return 0;
}

struct PointOptions {
    std::string field = "Q";
    std::string weights;
    std::string point;
    bool as_json = false;
};

int cmd_point(PointOptions const & o, std::ostream & out)
{
    FieldData F = make_field(parse_field_spec(o.field));
    Weight W = parse_weight(o.weights);
    auto coords = parse_point(o.point);
    require(static_cast<int>(coords.size()) == W.size(),
            "point has " + std::to_string(coords.size()) +
                " coordinates for a length-" + std::to_string(W.size()) +
                " weight");
    WpsPoint P = canonicalize(F, coords, W);
    double size = point_size(F, P);
    double h = h_infinity(F, P.coords, W);
    if (o.as_json) {
        json j;
        j["result"] = {{"canonical", format_point(P.coords)},
                       {"content", format_ideal(F, P.content)},
                       {"size", size},
                       {"h_infinity", h}};
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "canonical  = " << format_point(P.coords) << '\n';
    out << "content    = " << format_ideal(F, P.content) << '\n';
    out << "size       = " << fmt(size) << '\n';
    out << "h_infinity = " << fmt(h) << '\n';
    return 0;
}

struct VolumeOptions {
    std::string frame = "rational";
    std::string weights;
    double regulator = 1.0;
    bool regulator_given = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool as_json = false;
    int threads = 0;
};

int cmd_volume(VolumeOptions const & o, std::ostream & out)
{
    int r1, r2;
    if (o.frame == "rational") {
        r1 = 1;
        r2 = 0;
    } else if (o.frame == "complex") {
        r1 = 0;
        r2 = 1;
    } else if (o.frame == "real-quadratic") {
        r1 = 2;
        r2 = 0;
        require(o.regulator_given, "real-quadratic frame needs --R");
    } else {
        throw input_error("bad --frame '" + o.frame +
                          "' (rational | complex | real-quadratic)");
    }
    Weight W = parse_weight(o.weights);
    double closed = fundamental_domain_volume(r1, r2, o.regulator, W);
    RunManifest man;
    man.command = "volume";
    man.weights = {format_weight(W)};
    man.frame = o.frame;
    man.regulator = o.regulator;
    man.samples = o.samples;
    man.seed = o.seed;
    man.threads = o.threads;
    json result = {{"closed_form", closed}};
    std::ostringstream text;
    text << "closed form = " << fmt(closed) << '\n';
    if (o.samples) {
        require(o.seed_given, "--mc needs an explicit --seed");
        UnitLatticeFrame frame = make_frame(r1, r2, o.regulator);
        McEstimate est =
            monte_carlo_volume(frame, W, o.samples, o.seed, o.threads);
        double z = est.std_error > 0 ? (est.value - closed) / est.std_error
                                     : 0.0;
        result["estimate"] = est.value;
        result["std_error"] = est.std_error;
        result["hits"] = est.hits;
        result["z"] = z;
        text << "mc estimate = " << fmt(est.value) << "  +/- "
             << fmt(est.std_error, 4) << "  (z = " << fmt(z, 3)
             << ", samples = " << est.samples << ", hits = " << est.hits
             << ")\n";
    }
    if (o.as_json) {
        json j;
        j["manifest"] = manifest_to_json(man);
        j["result"] = result;
        out << j.dump(2) << '\n';
    } else {
        out << text.str();
    }
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> const & args, std::ostream & out,
            std::ostream & err)
{
    CLI::App app{"exact point counts and size asymptotics on weighted "
                 "projective spaces"};
    app.require_subcommand(1);

    CountOptions copt, sopt, kopt;
    VolumeOptions vopt;
    std::string replay_path;

    auto * c_count = app.add_subcommand("count", "exact point count");
    add_count_options(c_count, copt, false);
    auto * c_sweep =
        app.add_subcommand("sweep", "counts over a geometric grid of bounds");
    add_count_options(c_sweep, sopt, true);
    auto * c_const =
        app.add_subcommand("constant", "leading asymptotic constant");
    c_const->add_option("--field", kopt.field, "Q, Q(i) or d=<squarefree>");
    c_const->add_option("--weights", kopt.weights, "weight tuple w1,w2,...");
    c_const->add_option("--product", kopt.product,
                        "product factors, e.g. 1,1:1,1");
    c_const->add_option("--mode", kopt.mode, "as-printed | lemma-derived");
    c_const->add_option("--tol", kopt.tol, "result tolerance");
    c_const->add_flag("--json", kopt.as_json, "machine-readable output");
    auto * c_vol = app.add_subcommand(
        "volume", "fundamental-domain volume, closed form and Monte Carlo");
    c_vol->add_option("--frame", vopt.frame,
                      "rational | complex | real-quadratic");
    c_vol->add_option("--weights", vopt.weights, "weight tuple")->required();
    auto * ropt =
        c_vol->add_option("--R", vopt.regulator, "regulator of the frame");
    c_vol->add_option("--mc", vopt.samples, "Monte Carlo sample count");
    auto * sopt2 = c_vol->add_option("--seed", vopt.seed, "Monte Carlo seed");
    c_vol->add_option("--threads", vopt.threads, "worker cap");
    c_vol->add_flag("--json", vopt.as_json, "machine-readable output");
    PointOptions popt;
    auto * c_point = app.add_subcommand(
        "point", "canonical representative, content and size of a point");
    c_point->add_option("--field", popt.field, "Q, Q(i) or d=<squarefree>");
    c_point->add_option("--weights", popt.weights, "weight tuple")
        ->required();
    c_point->add_option("--point", popt.point,
                        "coordinates, e.g. 4,8,16 or 1+2w,0,3")
        ->required();
    c_point->add_flag("--json", popt.as_json, "machine-readable output");
    auto * c_replay =
        app.add_subcommand("replay", "re-run a saved JSON manifest");
    c_replay->add_option("manifest", replay_path, "manifest file")->required();

    std::vector<char const *> argv;
    argv.push_back(kToolName);
    for (auto const & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_count)
            return cmd_count(copt, out);
        if (*c_sweep)
            return cmd_sweep(sopt, out);
        if (*c_const)
            return cmd_constant(kopt, out);
        if (*c_vol) {
            vopt.regulator_given = ropt->count() > 0;
            vopt.seed_given = sopt2->count() > 0;
            return cmd_volume(vopt, out);
        }
        if (*c_point)
            return cmd_point(popt, out);
        if (*c_replay) {
            std::ifstream in(replay_path);
            require(in.good(), "cannot open manifest '" + replay_path + "'");
            json j = json::parse(in, nullptr, true);
            RunManifest m = manifest_from_json(
                j.contains("manifest") ? j.at("manifest") : j);
            return run_cli(manifest_to_args(m), out, err);
        }
        throw internal_error("no subcommand dispatched");
    } catch (input_error const & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (budget_error const & e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (internal_error const & e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    } catch (nlohmann::json::exception const & e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (std::exception const & e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
}

} // namespace wps
