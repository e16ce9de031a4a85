#include "sgwt/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "sgwt/error.hpp"

namespace sgwt::io {

namespace {

constexpr std::array<char, 4> kMagic{'S', 'G', 'W', 'T'};
constexpr std::uint32_t kBinaryVersion = 1;

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw DataError(source + ":" + std::to_string(line) + ": " + what);
}

std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, bool allow_comma) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [&](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || (allow_comma && c == ',');
  };
  while (i < s.size()) {
    while (i < s.size() && is_sep(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_sep(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view token, T& value) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw DataError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  return out;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (std::size_t i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
  out.write(b.data(), 4);
}

void put_f64(std::ostream& out, double x) {
  const auto v = std::bit_cast<std::uint64_t>(x);
  std::array<char, 8> b{};
  for (std::size_t i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFu);
  out.write(b.data(), 8);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) return false;
  v = 0;
  for (std::size_t i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return true;
}

bool get_f64(std::istream& in, double& x) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 8)) return false;
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  x = std::bit_cast<double>(v);
  return true;
}

// Next whitespace-delimited PGM header token, skipping '#' comments.
std::string pgm_token(std::istream& in, const std::string& source) {
  std::string tok;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      if (!tok.empty()) return tok;
    } else {
      tok.push_back(static_cast<char>(c));
    }
    c = in.get();
  }
  if (tok.empty()) fail(source, 1, "truncated PGM header");
  return tok;
}

GridMask read_pgm(std::istream& in, const std::string& source) {
  const std::string magic = pgm_token(in, source);
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned maxval = 0;
  if (!parse_number(pgm_token(in, source), width) ||
      !parse_number(pgm_token(in, source), height) ||
      !parse_number(pgm_token(in, source), maxval) || width == 0 || height == 0 || maxval == 0 ||
      maxval > 65535) {
    fail(source, 1, "invalid PGM header");
  }
  std::vector<bool> pixels(width * height);
  if (magic == "P2") {
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      unsigned v = 0;
      if (!parse_number(pgm_token(in, source), v)) fail(source, 1, "bad PGM pixel value");
      pixels[i] = v != 0;
    }
  } else {
    const std::size_t bytes = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> raw(pixels.size() * bytes);
    if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()))) {
      fail(source, 1, "truncated PGM raster");
    }
    for (std::size_t i = 0; i < pixels.size(); ++i) {
      pixels[i] = bytes == 1 ? raw[i] != 0 : (raw[2 * i] | raw[2 * i + 1]) != 0;
    }
  }
  return GridMask(height, width, std::move(pixels));
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  (void)ec;
  return std::string(buf.data(), ptr);
}

WeightedGraph read_edge_list(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::int64_t n = -1;
  std::vector<EdgeRecord> records;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(strip_comment(line));
    if (body.empty()) continue;
    const auto tokens = split(body, false);
    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "N" || !parse_number(tokens[1], n) || n <= 0) {
        fail(source, lineno, "expected header `N <num_vertices>`");
      }
      continue;
    }
    EdgeRecord r;
    if (tokens.size() != 3 || !parse_number(tokens[0], r.u) || !parse_number(tokens[1], r.v) ||
        !parse_number(tokens[2], r.w)) {
      fail(source, lineno, "expected `u v w`, got `" + std::string(body) + "`");
    }
    if (r.u < 0 || r.v < 0 || r.u >= n || r.v >= n) {
      fail(source, lineno, "vertex index out of range [0, " + std::to_string(n) + ")");
    }
    if (!(r.w > 0.0) || !std::isfinite(r.w)) {
      fail(source, lineno, "edge weight must be positive and finite");
    }
    const auto key = std::minmax(r.u, r.v);
    if (const auto [it, fresh] = seen.emplace(key, lineno); !fresh) {
      fail(source, lineno, "duplicate edge (" + std::to_string(key.first) + ", " +
                               std::to_string(key.second) + "), first seen on line " +
                               std::to_string(it->second));
    }
    records.push_back(r);
  }
  if (n < 0) fail(source, lineno, "missing header `N <num_vertices>`");
  try {
    return build_from_edge_list(static_cast<std::size_t>(n), records);
  } catch (const DataError& e) {
    throw DataError(source + ": " + e.what());
  }
}

WeightedGraph read_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  out << "N " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
}

void write_edge_list(const std::filesystem::path& path, const WeightedGraph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
}

GridMask read_grid_mask(std::istream& in, const std::string& source) {
  const int c0 = in.peek();
  if (c0 == 'P') return read_pgm(in, source);

  std::string line;
  std::size_t lineno = 0;
  std::size_t width = 0;
  std::vector<bool> pixels;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(strip_comment(line));
    if (body.empty()) continue;
    std::size_t row_width = 0;
    for (char ch : body) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch != '0' && ch != '1') fail(source, lineno, "mask cells must be 0 or 1");
      pixels.push_back(ch == '1');
      ++row_width;
    }
    if (width == 0) width = row_width;
    if (row_width != width) fail(source, lineno, "ragged mask row");
  }
  if (width == 0) fail(source, lineno, "empty mask");
  const std::size_t height = pixels.size() / width;
  return GridMask(height, width, std::move(pixels));
}

GridMask read_grid_mask(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::in | std::ios::binary);
  return read_grid_mask(in, path.string());
}

PointCloud read_point_cloud(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<double>> points;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(strip_comment(line));
    if (body.empty()) continue;
    const auto tokens = split(body, true);
    std::vector<double> p(tokens.size());
    bool numeric = true;
    for (std::size_t i = 0; i < tokens.size(); ++i) numeric = numeric && parse_number(tokens[i], p[i]);
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      fail(source, lineno, "non-numeric coordinate");
    }
    first = false;
    if (!points.empty() && p.size() != points.front().size()) {
      fail(source, lineno, "point has " + std::to_string(p.size()) + " coordinates, expected " +
                               std::to_string(points.front().size()));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) fail(source, lineno, "no points");
  return PointCloud(points);
}

PointCloud read_point_cloud(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_point_cloud(in, path.string());
}

void write_point_cloud(const std::filesystem::path& path, const PointCloud& cloud) {
  auto out = open_out(path);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << format_double(p[k]);
    out << '\n';
  }
}

std::vector<double> read_signal(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> f;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(strip_comment(line));
    if (body.empty()) continue;
    double v = 0.0;
    if (!parse_number(body, v) || !std::isfinite(v)) fail(source, lineno, "expected one finite value");
    f.push_back(v);
  }
  if (f.empty()) fail(source, lineno, "signal is empty");
  return f;
}

std::vector<double> read_signal(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_signal(in, path.string());
}

void write_signal(const std::filesystem::path& path, std::span<const double> f) {
  auto out = open_out(path);
  for (double v : f) out << format_double(v) << '\n';
}

bool is_binary_coefficient_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return ext == ".bin" || ext == ".sgwt";
}

void write_coefficients_csv(std::ostream& out, const CoefficientSet& c) {
  out << "band,vertex,value\n";
  for (std::size_t b = 0; b < c.num_bands(); ++b) {
    const auto band = c.band(b);
    for (std::size_t v = 0; v < band.size(); ++v) {
      out << b << ',' << v << ',' << format_double(band[v]) << '\n';
    }
  }
}

void write_coefficients_binary(std::ostream& out, const CoefficientSet& c) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kBinaryVersion);
  put_u32(out, static_cast<std::uint32_t>(c.num_vertices()));
  put_u32(out, static_cast<std::uint32_t>(c.num_scales()));
  for (double x : c.values()) put_f64(out, x);
}

CoefficientSet read_coefficients_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::map<std::pair<std::size_t, std::size_t>, double> cells;
  std::size_t max_band = 0;
  std::size_t max_vertex = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (!header) {
      if (body != "band,vertex,value") fail(source, lineno, "expected header `band,vertex,value`");
      header = true;
      continue;
    }
    const auto tokens = split(body, true);
    std::size_t b = 0;
    std::size_t v = 0;
    double x = 0.0;
    if (tokens.size() != 3 || !parse_number(tokens[0], b) || !parse_number(tokens[1], v) ||
        !parse_number(tokens[2], x)) {
      fail(source, lineno, "expected `band,vertex,value`");
    }
    if (!cells.emplace(std::make_pair(b, v), x).second) fail(source, lineno, "duplicate entry");
    max_band = std::max(max_band, b);
    max_vertex = std::max(max_vertex, v);
  }
  if (cells.empty()) fail(source, lineno, "no coefficients");
  const std::size_t n = max_vertex + 1;
  const std::size_t bands = max_band + 1;
  if (cells.size() != n * bands) fail(source, lineno, "coefficient table is incomplete");
  std::vector<double> data(n * bands);
  for (const auto& [key, x] : cells) data[key.first * n + key.second] = x;
  return CoefficientSet(n, bands - 1, std::move(data));
}

CoefficientSet read_coefficients_binary(std::istream& in, const std::string& source) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), 4) || magic != kMagic) fail(source, 1, "missing SGWT magic");
  std::uint32_t version = 0;
  std::uint32_t n = 0;
  std::uint32_t J = 0;
  if (!get_u32(in, version) || !get_u32(in, n) || !get_u32(in, J)) fail(source, 1, "truncated header");
  if (version != kBinaryVersion) fail(source, 1, "unsupported version " + std::to_string(version));
  if (n == 0) fail(source, 1, "N must be positive");
  std::vector<double> data(static_cast<std::size_t>(n) * (static_cast<std::size_t>(J) + 1));
  for (double& x : data) {
    if (!get_f64(in, x)) fail(source, 1, "truncated coefficient payload");
  }
  return CoefficientSet(n, J, std::move(data));
}

void write_coefficients(const std::filesystem::path& path, const CoefficientSet& c) {
  if (is_binary_coefficient_path(path)) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    write_coefficients_binary(out, c);
  } else {
    auto out = open_out(path);
    write_coefficients_csv(out, c);
  }
}

CoefficientSet read_coefficients(const std::filesystem::path& path) {
  if (is_binary_coefficient_path(path)) {
    auto in = open_in(path, std::ios::in | std::ios::binary);
    return read_coefficients_binary(in, path.string());
  }
  auto in = open_in(path);
  return read_coefficients_csv(in, path.string());
}

}  // namespace sgwt::io
