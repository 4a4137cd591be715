#include "wildarc/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

#include "wildarc/errors.hpp"

namespace wildarc {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& body) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::config_invalid, "cannot open for writing: " + path.string());
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::config_invalid, "cannot open for reading: " + path.string());
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return body;
}

std::string obj_polyline(const std::vector<Point3>& pts) {
  std::string out;
  out.reserve(pts.size() * 48);
  for (const auto& p : pts)
    out += "v " + fmt17(p.x1) + " " + fmt17(p.x2) + " " + fmt17(p.x3) + "\n";
  if (pts.size() >= 2) {
    out += "l";
    for (std::size_t i = 1; i <= pts.size(); ++i) out += " " + std::to_string(i);
    out += "\n";
  }
  return out;
}

std::string obj_mesh(const std::vector<Point3>& vertices,
                     const std::vector<std::array<int, 3>>& faces) {
  std::string out;
  out.reserve(vertices.size() * 48 + faces.size() * 16);
  for (const auto& p : vertices)
    out += "v " + fmt17(p.x1) + " " + fmt17(p.x2) + " " + fmt17(p.x3) + "\n";
  for (const auto& f : faces)
    out += "f " + std::to_string(f[0]) + " " + std::to_string(f[1]) + " " +
           std::to_string(f[2]) + "\n";
  return out;
}

std::string csv_trace(const std::vector<double>& t, const std::vector<Point3>& pts) {
  std::string out = "t,x1,x2,x3\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += fmt17(i < t.size() ? t[i] : 0.0);
    out += "," + fmt17(pts[i].x1) + "," + fmt17(pts[i].x2) + "," + fmt17(pts[i].x3) + "\n";
  }
  return out;
}

void append_u32_le(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_f64_le(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  append_u64_le(out, bits);
}

std::uint32_t read_u32_le(const std::string& in, std::size_t& pos) {
  if (pos + 4 > in.size()) fail(errc::config_invalid, "truncated binary input");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  pos += 4;
  return v;
}

std::uint64_t read_u64_le(const std::string& in, std::size_t& pos) {
  if (pos + 8 > in.size()) fail(errc::config_invalid, "truncated binary input");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  pos += 8;
  return v;
}

double read_f64_le(const std::string& in, std::size_t& pos) {
  const std::uint64_t bits = read_u64_le(in, pos);
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

}  // namespace wildarc
