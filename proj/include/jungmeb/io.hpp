#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "jungmeb/certificate.hpp"
#include "jungmeb/geometry.hpp"
#include "jungmeb/solver.hpp"

namespace jungmeb {

enum class PointFormat { Csv, Json };

enum class Shape { UniformCube, SphereSurface, Clustered, Coplanar, Collinear };

const char* to_string(Shape s);
std::optional<Shape> shape_from_string(std::string_view name);

/// Deterministic instance recipe: the same spec always produces byte-identical
/// points.
struct InstanceSpec {
    int n = 1;
    std::uint64_t seed = 0;
    Shape shape = Shape::UniformCube;
    double scale = 1.0;
};

/// CSV: one "x,y,z" triple per line; blank lines, '#' comments, and an
/// optional leading "x,y,z" header are skipped. JSON: {"points": [[x,y,z],…]}.
/// Point indices are the 0-based positions among the parsed points; exact
/// duplicates are dropped by the PointSet rules.
PointSet parse_points(std::string_view bytes, PointFormat format);

/// Canonical one-line JSON result; keys in fixed order, numbers at 17
/// significant digits, newline-terminated. Support indices are reported in
/// the caller's original numbering.
std::string emit_result(const MebResult& result, const JungCertificate& cert,
                        const PointSet& ps);

/// The certificate object alone, same formatting rules.
std::string emit_certificate(const JungCertificate& cert);

PointSet gen_instance(const InstanceSpec& spec);

/// CSV emission of a generated instance with a comment header echoing the
/// generator identifier and the spec, so runs are reproducible.
std::string emit_instance_csv(const PointSet& ps, const InstanceSpec& spec);

/// Entry point behind the command-line tool. Subcommands: solve, oracle,
/// verify, gen. Exit codes: 0 success, 1 certificate failure or
/// non-convergence, 2 input/parse errors, 3 usage errors.
int run_cli(int argc, const char* const* argv);

}  // namespace jungmeb
