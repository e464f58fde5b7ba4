#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <vector>

#include "jungmeb/certificate.hpp"
#include "jungmeb/geometry.hpp"
#include "jungmeb/io.hpp"
#include "jungmeb/oracle.hpp"
#include "jungmeb/solver.hpp"

namespace py = pybind11;
using namespace jungmeb;

namespace {

using PyPoints = std::vector<std::array<double, 3>>;

PointSet to_point_set(const PyPoints& pts) {
    std::vector<Point3> raw;
    raw.reserve(pts.size());
    for (const auto& p : pts) raw.push_back({p[0], p[1], p[2]});
    return PointSet(raw);
}

py::tuple to_tuple(const Point3& p) { return py::make_tuple(p.x, p.y, p.z); }

py::dict result_to_dict(const MebResult& r, const PointSet& ps) {
    py::list support;
    for (int k = 0; k < r.support.size(); ++k)
        support.append(ps.original_index(r.support[k]));
    py::dict d;
    d["center"] = to_tuple(r.sphere.center);
    d["radius"] = r.sphere.radius;
    d["support"] = support;
    d["terminal_case"] = to_string(r.terminal_case);
    d["restarts"] = r.restarts;
    d["steps"] = r.steps;
    d["converged"] = r.converged;
    d["step_radii"] = r.step_radii;
    d["restart_radii"] = r.restart_radii;
    return d;
}

py::dict certificate_to_dict(const JungCertificate& c) {
    py::dict d;
    d["a"] = c.diameter;
    d["r"] = c.radius;
    d["ratio"] = std::isnan(c.ratio) ? py::object(py::none()) : py::object(py::float_(c.ratio));
    d["dimension_class"] = to_string(c.dimension_class);
    d["bound"] = c.bound;
    d["margin"] = c.margin;
    d["pass"] = c.pass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minimal enclosing spheres in 3D with Jung-bound certificates.";

    py::register_exception<Error>(m, "Error");

    m.def(
        "solve",
        [](const PyPoints& pts, double eps) {
            const PointSet ps = to_point_set(pts);
            return result_to_dict(solve(ps, Tolerance(eps)), ps);
        },
        py::arg("points"), py::arg("eps") = 1e-9,
        "Minimal enclosing sphere of a 3D point list.");

    m.def(
        "oracle",
        [](const PyPoints& pts, double eps) {
            const PointSet ps = to_point_set(pts);
            return result_to_dict(brute_force_meb(ps, Tolerance(eps)), ps);
        },
        py::arg("points"), py::arg("eps") = 1e-9,
        "Brute-force minimal enclosing sphere (at most 512 points).");

    m.def(
        "certificate",
        [](const PyPoints& pts, const std::array<double, 3>& center, double radius, double eps) {
            const PointSet ps = to_point_set(pts);
            const Sphere s{{center[0], center[1], center[2]}, radius};
            return certificate_to_dict(make_certificate(ps, s, Tolerance(eps)));
        },
        py::arg("points"), py::arg("center"), py::arg("radius"), py::arg("eps") = 1e-9,
        "Check the diameter-based radius bounds for an enclosing sphere.");

    m.def(
        "solve_certified",
        [](const PyPoints& pts, double eps) {
            const PointSet ps = to_point_set(pts);
            const Tolerance tol(eps);
            const MebResult r = solve(ps, tol);
            py::dict d = result_to_dict(r, ps);
            d["certificate"] = certificate_to_dict(make_certificate(ps, r.sphere, tol));
            return d;
        },
        py::arg("points"), py::arg("eps") = 1e-9,
        "Solve and attach the certificate, mirroring the CLI result.");

    m.def(
        "result_json",
        [](const PyPoints& pts, double eps) {
            const PointSet ps = to_point_set(pts);
            const Tolerance tol(eps);
            const MebResult r = solve(ps, tol);
            return emit_result(r, make_certificate(ps, r.sphere, tol), ps);
        },
        py::arg("points"), py::arg("eps") = 1e-9,
        "Canonical one-line JSON, byte-identical to the CLI output.");

    m.def(
        "diameter",
        [](const PyPoints& pts) {
            const PointSet ps = to_point_set(pts);
            const DiameterResult d = diameter(ps);
            return py::make_tuple(d.value, py::make_tuple(ps.original_index(d.first),
                                                          ps.original_index(d.second)));
        },
        py::arg("points"), "Maximum pairwise distance and the pair attaining it.");

    m.def(
        "sphere_through",
        [](const PyPoints& pts) {
            std::vector<Point3> raw;
            raw.reserve(pts.size());
            for (const auto& p : pts) raw.push_back({p[0], p[1], p[2]});
            const Sphere s = sphere_through(raw);
            return py::make_tuple(to_tuple(s.center), s.radius);
        },
        py::arg("points"), "Sphere with 2, 3, or 4 given points on its frontier.");

    m.def(
        "gen_points",
        [](int n, std::uint64_t seed, const std::string& shape, double scale) {
            const auto sh = shape_from_string(shape);
            if (!sh) throw py::value_error("unknown shape: " + shape);
            const PointSet ps = gen_instance({n, seed, *sh, scale});
            PyPoints out;
            out.reserve(static_cast<std::size_t>(ps.size()));
            for (const Point3& p : ps.points()) out.push_back({p.x, p.y, p.z});
            return out;
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("shape") = "UniformCube",
        py::arg("scale") = 1.0, "Deterministic instance generator used by the test suites.");
}
