#include "jungmeb/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jungmeb/oracle.hpp"

namespace jungmeb {

namespace {

constexpr const char* kGeneratorId = "mt19937_64/box-muller v1";

// 17 significant digits round-trip any double exactly.
std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool is_csv_header(std::string_view line) {
    std::string norm;
    for (char ch : line)
        if (ch != ' ' && ch != '\t')
            norm += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return norm == "x,y,z";
}

double parse_csv_field(std::string_view field, long line_no, long field_no) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw ParseError("line " + std::to_string(line_no) + ": field " +
                             std::to_string(field_no) + " is not a number",
                         line_no, field_no);
    return v;
}

PointSet parse_csv(std::string_view text) {
    std::vector<Point3> pts;
    long line_no = 0;
    bool header_possible = true;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        const std::size_t stop = end == std::string_view::npos ? text.size() : end;
        const std::string_view line = trim(text.substr(start, stop - start));
        ++line_no;

        if (!line.empty() && line.front() != '#') {
            if (header_possible && is_csv_header(line)) {
                header_possible = false;
            } else {
                header_possible = false;
                int fields = 1;
                for (char ch : line) fields += ch == ',';
                if (fields != 3)
                    throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields, got " +
                                         std::to_string(fields),
                                     line_no, fields);
                std::size_t a = line.find(',');
                std::size_t b = line.find(',', a + 1);
                const Point3 p{parse_csv_field(line.substr(0, a), line_no, 1),
                               parse_csv_field(line.substr(a + 1, b - a - 1), line_no, 2),
                               parse_csv_field(line.substr(b + 1), line_no, 3)};
                if (!is_finite(p))
                    throw NonFiniteCoordinate("line " + std::to_string(line_no) +
                                              ": coordinate is not finite");
                pts.push_back(p);
            }
        }

        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (pts.empty()) throw EmptyInput("no points in CSV input");
    return PointSet(pts);
}

PointSet parse_json_points(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0,
                         static_cast<long>(e.byte));
    }
    if (!j.is_object() || !j.contains("points"))
        throw ParseError("expected a JSON object with a \"points\" array", 0, 0);
    const auto& arr = j.at("points");
    if (!arr.is_array()) throw ParseError("\"points\" must be an array", 0, 0);

    std::vector<Point3> pts;
    pts.reserve(arr.size());
    long k = 0;
    for (const auto& el : arr) {
        if (!el.is_array() || el.size() != 3 || !el[0].is_number() || !el[1].is_number() ||
            !el[2].is_number())
            throw ParseError("point " + std::to_string(k) + " must be an array of 3 numbers", 0,
                             k);
        const Point3 p{el[0].get<double>(), el[1].get<double>(), el[2].get<double>()};
        if (!is_finite(p))
            throw NonFiniteCoordinate("non-finite coordinate at point " + std::to_string(k));
        pts.push_back(p);
        ++k;
    }
    if (pts.empty()) throw EmptyInput("no points in JSON input");
    return PointSet(pts);
}

void append_point(std::string& out, const Point3& p) {
    out += '[';
    out += fmt_double(p.x);
    out += ',';
    out += fmt_double(p.y);
    out += ',';
    out += fmt_double(p.z);
    out += ']';
}

void append_certificate(std::string& out, const JungCertificate& c) {
    out += "{\"a\":";
    out += fmt_double(c.diameter);
    out += ",\"r\":";
    out += fmt_double(c.radius);
    out += ",\"ratio\":";
    out += std::isnan(c.ratio) ? "null" : fmt_double(c.ratio);
    out += ",\"dimension_class\":\"";
    out += to_string(c.dimension_class);
    out += "\",\"bound\":";
    out += fmt_double(c.bound);
    out += ",\"margin\":";
    out += fmt_double(c.margin);
    out += ",\"pass\":";
    out += c.pass ? "true" : "false";
    out += '}';
}

// Deterministic sampling on top of the standard-pinned mt19937_64 stream:
// uniform doubles from the top 53 bits, gaussians via Box-Muller.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double uniform01_positive() {
        double v = uniform01();
        while (v <= 0.0) v = uniform01();
        return v;
    }

    double gauss() {
        if (have_) {
            have_ = false;
            return cached_;
        }
        const double u1 = uniform01_positive();
        const double u2 = uniform01();
        const double m = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        cached_ = m * std::sin(two_pi * u2);
        have_ = true;
        return m * std::cos(two_pi * u2);
    }

    Vec3 gauss3() { return {gauss(), gauss(), gauss()}; }

    Vec3 unit_vector() {
        for (;;) {
            const Vec3 v = gauss3();
            const double n2 = norm_squared(v);
            if (n2 > 1e-12) return v / std::sqrt(n2);
        }
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
    bool have_ = false;
    double cached_ = 0.0;
};

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "stdin" || path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open input file: " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path == "stdout" || path == "-") {
        std::cout << bytes << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << bytes;
    if (!out) throw Error("failed writing output file: " + path);
}

Sphere read_sphere_json(const std::string& path) {
    const std::string text = read_input(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid sphere JSON: ") + e.what(), 0,
                         static_cast<long>(e.byte));
    }
    if (!j.is_object() || !j.contains("center") || !j.contains("radius"))
        throw ParseError("sphere JSON needs \"center\" and \"radius\"", 0, 0);
    const auto& c = j.at("center");
    if (!c.is_array() || c.size() != 3 || !c[0].is_number() || !c[1].is_number() ||
        !c[2].is_number())
        throw ParseError("\"center\" must be an array of 3 numbers", 0, 0);
    if (!j.at("radius").is_number()) throw ParseError("\"radius\" must be a number", 0, 0);
    const Sphere s{{c[0].get<double>(), c[1].get<double>(), c[2].get<double>()},
                   j.at("radius").get<double>()};
    if (!is_finite(s.center) || !std::isfinite(s.radius) || s.radius < 0.0)
        throw ParseError("sphere must have a finite center and radius >= 0", 0, 0);
    return s;
}

}  // namespace

const char* to_string(Shape s) {
    switch (s) {
        case Shape::UniformCube: return "UniformCube";
        case Shape::SphereSurface: return "SphereSurface";
        case Shape::Clustered: return "Clustered";
        case Shape::Coplanar: return "Coplanar";
        case Shape::Collinear: return "Collinear";
    }
    return "?";
}

std::optional<Shape> shape_from_string(std::string_view name) {
    for (Shape s : {Shape::UniformCube, Shape::SphereSurface, Shape::Clustered, Shape::Coplanar,
                    Shape::Collinear})
        if (name == to_string(s)) return s;
    return std::nullopt;
}

PointSet parse_points(std::string_view bytes, PointFormat format) {
    return format == PointFormat::Csv ? parse_csv(bytes) : parse_json_points(bytes);
}

std::string emit_result(const MebResult& result, const JungCertificate& cert,
                        const PointSet& ps) {
    std::string out;
    out.reserve(512);
    out += "{\"center\":";
    append_point(out, result.sphere.center);
    out += ",\"radius\":";
    out += fmt_double(result.sphere.radius);
    out += ",\"support\":[";
    for (int k = 0; k < result.support.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(ps.original_index(result.support[k]));
    }
    out += "],\"terminal_case\":\"";
    out += to_string(result.terminal_case);
    out += "\",\"restarts\":";
    out += std::to_string(result.restarts);
    out += ",\"steps\":";
    out += std::to_string(result.steps);
    out += ",\"converged\":";
    out += result.converged ? "true" : "false";
    out += ",\"certificate\":";
    append_certificate(out, cert);
    out += "}\n";
    return out;
}

std::string emit_certificate(const JungCertificate& cert) {
    std::string out;
    append_certificate(out, cert);
    out += '\n';
    return out;
}

PointSet gen_instance(const InstanceSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("instance size must be >= 1");
    if (!(spec.scale > 0.0) || !std::isfinite(spec.scale))
        throw std::invalid_argument("instance scale must be positive and finite");

    Sampler rng(spec.seed);
    std::vector<Point3> pts;
    pts.reserve(static_cast<std::size_t>(spec.n));

    switch (spec.shape) {
        case Shape::UniformCube:
            for (int i = 0; i < spec.n; ++i)
                pts.push_back({spec.scale * rng.uniform01(), spec.scale * rng.uniform01(),
                               spec.scale * rng.uniform01()});
            break;
        case Shape::SphereSurface:
            for (int i = 0; i < spec.n; ++i) pts.push_back(spec.scale * rng.unit_vector());
            break;
        case Shape::Clustered: {
            const int k = std::clamp(spec.n / 8, 1, 8);
            std::vector<Point3> centers;
            centers.reserve(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                centers.push_back({spec.scale * rng.uniform01(), spec.scale * rng.uniform01(),
                                   spec.scale * rng.uniform01()});
            const double sigma = 0.05 * spec.scale;
            for (int i = 0; i < spec.n; ++i) {
                const Point3& c = centers[static_cast<std::size_t>(rng.raw() % k)];
                pts.push_back(c + sigma * rng.gauss3());
            }
        } break;
        case Shape::Coplanar: {
            const Point3 origin{spec.scale * rng.uniform01(), spec.scale * rng.uniform01(),
                                spec.scale * rng.uniform01()};
            const Vec3 u = rng.unit_vector();
            Vec3 v;
            for (;;) {
                const Vec3 w = rng.unit_vector();
                v = w - dot(w, u) * u;
                const double n2 = norm_squared(v);
                if (n2 > 1e-6) {
                    v = v / std::sqrt(n2);
                    break;
                }
            }
            for (int i = 0; i < spec.n; ++i) {
                const double a = spec.scale * rng.uniform01();
                const double b = spec.scale * rng.uniform01();
                pts.push_back(origin + a * u + b * v);
            }
        } break;
        case Shape::Collinear: {
            const Point3 origin{spec.scale * rng.uniform01(), spec.scale * rng.uniform01(),
                                spec.scale * rng.uniform01()};
            const Vec3 u = rng.unit_vector();
            for (int i = 0; i < spec.n; ++i)
                pts.push_back(origin + (spec.scale * rng.uniform01()) * u);
        } break;
    }
    return PointSet(pts);
}

std::string emit_instance_csv(const PointSet& ps, const InstanceSpec& spec) {
    std::string out;
    out += "# generator: ";
    out += kGeneratorId;
    out += "\n# seed: ";
    out += std::to_string(spec.seed);
    out += "\n# shape: ";
    out += to_string(spec.shape);
    out += "\n# n: ";
    out += std::to_string(spec.n);
    out += "\n# scale: ";
    out += fmt_double(spec.scale);
    out += "\nx,y,z\n";
    for (const Point3& p : ps.points()) {
        out += fmt_double(p.x);
        out += ',';
        out += fmt_double(p.y);
        out += ',';
        out += fmt_double(p.z);
        out += '\n';
    }
    return out;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Minimal enclosing spheres in 3D with Jung-bound certificates"};
    app.require_subcommand(1);

    std::string input = "stdin";
    std::string output = "stdout";
    std::string format = "csv";
    std::string sphere_path;
    double tol_eps = 1e-9;

    InstanceSpec spec;
    std::string shape_name = "UniformCube";

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "point file, or 'stdin'")->capture_default_str();
        cmd->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--tol", tol_eps, "relative tolerance eps")->capture_default_str();
        cmd->add_option("--output", output, "result file, or 'stdout'")->capture_default_str();
    };

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "solve the minimal enclosing sphere and certify it");
    add_common(solve_cmd);

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force minimal enclosing sphere (n <= 512)");
    add_common(oracle_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "re-certify a sphere for a point set");
    add_common(verify_cmd);
    verify_cmd
        ->add_option("--sphere", sphere_path,
                     "sphere JSON file ({\"center\":[x,y,z],\"radius\":r})")
        ->required();

    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a deterministic point instance as CSV");
    gen_cmd->add_option("--n", spec.n, "point count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen_cmd->add_option("--seed", spec.seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("--shape", shape_name, "instance shape")
        ->check(CLI::IsMember(
            {"UniformCube", "SphereSurface", "Clustered", "Coplanar", "Collinear"}))
        ->capture_default_str();
    gen_cmd->add_option("--scale", spec.scale, "length scale")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen_cmd->add_option("--output", output, "output file, or 'stdout'")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (gen_cmd->parsed()) {
            spec.shape = *shape_from_string(shape_name);
            const PointSet ps = gen_instance(spec);
            write_output(output, emit_instance_csv(ps, spec));
            return 0;
        }

        const Tolerance tol(tol_eps);
        const PointFormat fmt = format == "json" ? PointFormat::Json : PointFormat::Csv;
        const PointSet ps = parse_points(read_input(input), fmt);

        if (verify_cmd->parsed()) {
            const Sphere s = read_sphere_json(sphere_path);
            const JungCertificate cert = make_certificate(ps, s, tol);
            write_output(output, emit_certificate(cert));
            return cert.pass ? 0 : 1;
        }

        const MebResult result = solve_cmd->parsed() ? solve(ps, tol) : brute_force_meb(ps, tol);
        const JungCertificate cert = make_certificate(ps, result.sphere, tol);
        write_output(output, emit_result(result, cert, ps));
        return cert.pass && result.converged ? 0 : 1;
    } catch (const NotEnclosing& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace jungmeb
