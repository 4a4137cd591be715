#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wildarc/geometry.hpp"

namespace wildarc {

/// Fixed float formatting for all exports: %.17g, C locale. Two runs with the
/// same inputs must produce byte-identical files.
std::string fmt17(double v);

void write_text_file(const std::filesystem::path& path, const std::string& body);
std::string read_text_file(const std::filesystem::path& path);

/// OBJ polyline: v-records followed by a single l-record over all vertices.
std::string obj_polyline(const std::vector<Point3>& pts);

/// OBJ triangle mesh with 1-based indices; vertex order is caller-fixed.
std::string obj_mesh(const std::vector<Point3>& vertices,
                     const std::vector<std::array<int, 3>>& faces);

/// CSV with a header row; each row is (t, x1, x2, x3).
std::string csv_trace(const std::vector<double>& t, const std::vector<Point3>& pts);

void append_u32_le(std::string& out, std::uint32_t v);
void append_u64_le(std::string& out, std::uint64_t v);
void append_f64_le(std::string& out, double v);
std::uint32_t read_u32_le(const std::string& in, std::size_t& pos);
std::uint64_t read_u64_le(const std::string& in, std::size_t& pos);
double read_f64_le(const std::string& in, std::size_t& pos);

}  // namespace wildarc
