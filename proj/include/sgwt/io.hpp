#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sgwt/coefficients.hpp"
#include "sgwt/graph.hpp"

namespace sgwt::io {

// File formats
//
// Edge list: text, '#' starts a comment, first record `N <num_vertices>`,
//   then one `u v w` per line (0-based indices, whitespace separated).
// Grid mask: PGM (P2 or P5, nonzero pixel = inside) or a text grid of 0/1
//   characters, optionally separated by whitespace.
// Point cloud: CSV, one point per row; a non-numeric first row is a header.
// Signal: one value per line, '#' comments.
// Coefficients: CSV with header `band,vertex,value`, or binary: "SGWT",
//   u32 version (1), u32 N, u32 J, then (J+1)N f64, all little-endian.
//   Paths ending in .bin or .sgwt use the binary layout.
//
// Parse errors throw DataError with "<source>:<line>: " prefixed.

WeightedGraph read_edge_list(std::istream& in, const std::string& source = "<stream>");
WeightedGraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const WeightedGraph& g);
void write_edge_list(const std::filesystem::path& path, const WeightedGraph& g);

GridMask read_grid_mask(std::istream& in, const std::string& source = "<stream>");
GridMask read_grid_mask(const std::filesystem::path& path);

PointCloud read_point_cloud(std::istream& in, const std::string& source = "<stream>");
PointCloud read_point_cloud(const std::filesystem::path& path);
void write_point_cloud(const std::filesystem::path& path, const PointCloud& cloud);

std::vector<double> read_signal(std::istream& in, const std::string& source = "<stream>");
std::vector<double> read_signal(const std::filesystem::path& path);
void write_signal(const std::filesystem::path& path, std::span<const double> f);

bool is_binary_coefficient_path(const std::filesystem::path& path);

void write_coefficients_csv(std::ostream& out, const CoefficientSet& c);
void write_coefficients_binary(std::ostream& out, const CoefficientSet& c);
CoefficientSet read_coefficients_csv(std::istream& in, const std::string& source = "<stream>");
CoefficientSet read_coefficients_binary(std::istream& in, const std::string& source = "<stream>");

/// Chooses the layout by extension.
void write_coefficients(const std::filesystem::path& path, const CoefficientSet& c);
CoefficientSet read_coefficients(const std::filesystem::path& path);

/// Shortest decimal form that round-trips ("%.17g").
std::string format_double(double x);

}  // namespace sgwt::io
