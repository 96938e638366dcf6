#include "rpdo/serialize.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rpdo/cutoff.hpp"

namespace rpdo {

namespace {

constexpr char kMagic[8] = {'R', 'S', 'Y', 'M', 'B', 'O', 'L', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_u64(std::ostream& os, std::uint64_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void put_str(std::ostream& os, const std::string& s) {
  put_u32(os, static_cast<std::uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t get_u32(std::istream& is) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

std::uint64_t get_u64(std::istream& is) {
  std::uint64_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

double get_f64(std::istream& is) {
  double v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

std::string get_str(std::istream& is) {
  const auto len = get_u32(is);
  std::string s(len, '\0');
  is.read(s.data(), len);
  return s;
}

}  // namespace

void save_symbol(const Symbol& s, const std::string& path) {
  check_symbol(s);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  require(os.good(), "save_symbol: cannot open output file");
  os.write(kMagic, sizeof kMagic);
  put_u32(os, static_cast<std::uint32_t>(s.dim));
  put_u64(os, static_cast<std::uint64_t>(s.n));
  put_str(os, s.tag.family);
  put_u32(os, static_cast<std::uint32_t>(s.tag.params.size()));
  for (const auto& [k, v] : s.tag.params) {
    put_str(os, k);
    put_f64(os, v);
  }
  const Eigen::Index count = s.values.size();
  put_u64(os, static_cast<std::uint64_t>(count));
  std::vector<float> payload(static_cast<size_t>(count) * 2);
  const cplx* data = s.values.data();
  for (Eigen::Index i = 0; i < count; ++i) {
    payload[2 * static_cast<size_t>(i)] = static_cast<float>(data[i].real());
    payload[2 * static_cast<size_t>(i) + 1] = static_cast<float>(data[i].imag());
  }
  os.write(reinterpret_cast<const char*>(payload.data()),
           static_cast<std::streamsize>(payload.size() * sizeof(float)));
  require(os.good(), "save_symbol: write failed");
  os.close();

  nlohmann::ordered_json meta;
  meta["schema_version"] = 1;
  meta["dim"] = s.dim;
  meta["n"] = s.n;
  meta["family"] = s.tag.family;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : s.tag.params) params[k] = v;
  meta["params"] = params;
  meta["dtype"] = "complex64";
  meta["count"] = count;
  std::ofstream js(path + ".json", std::ios::trunc);
  require(js.good(), "save_symbol: cannot open sidecar");
  js << meta.dump(2) << "\n";
}

Symbol load_symbol(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  require(is.good(), "load_symbol: cannot open file");
  char magic[8];
  is.read(magic, sizeof magic);
  require(std::equal(magic, magic + 8, kMagic), "load_symbol: bad magic");
  Symbol s;
  s.dim = static_cast<int>(get_u32(is));
  s.n = static_cast<Eigen::Index>(get_u64(is));
  s.tag.family = get_str(is);
  const auto nparams = get_u32(is);
  for (std::uint32_t i = 0; i < nparams; ++i) {
    std::string key = get_str(is);
    const double v = get_f64(is);
    s.tag.params.emplace_back(std::move(key), v);
  }
  const auto count = static_cast<Eigen::Index>(get_u64(is));
  const Eigen::Index side = s.dim == 1 ? s.n : s.n * s.n;
  require(count == side * side, "load_symbol: payload count mismatch");
  std::vector<float> payload(static_cast<size_t>(count) * 2);
  is.read(reinterpret_cast<char*>(payload.data()),
          static_cast<std::streamsize>(payload.size() * sizeof(float)));
  require(is.good(), "load_symbol: truncated payload");
  s.values.resize(side, side);
  cplx* data = s.values.data();
  for (Eigen::Index i = 0; i < count; ++i)
    data[i] = cplx(payload[2 * static_cast<size_t>(i)],
                   payload[2 * static_cast<size_t>(i) + 1]);
  check_symbol(s);
  return s;
}

void write_band_table_csv(const std::vector<BandTableRow>& table,
                          const std::string& path) {
  std::ofstream os(path, std::ios::trunc);
  require(os.good(), "write_band_table_csv: cannot open file");
  os << "l,weight,sup_x_norm,term\n";
  os << std::setprecision(17);
  for (const auto& row : table)
    os << row.l << "," << row.weight << "," << row.sup_x_norm << "," << row.term
       << "\n";
}

void write_constants_csv(const std::vector<MaximalReport>& rows,
                         const std::string& path) {
  std::ofstream os(path, std::ios::trunc);
  require(os.good(), "write_constants_csv: cannot open file");
  os << "m,measured_C,u_grid_size\n";
  os << std::setprecision(17);
  for (const auto& row : rows)
    os << row.m << "," << row.measured_c << "," << row.u_grid_size << "\n";
}

nlohmann::ordered_json bound_report_json(const BoundReport& rep) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["b2"] = rep.b2;
  j["b1"] = rep.b1;
  j["bq"] = rep.bq;
  j["bq_exponent"] = rep.bq_exponent;
  j["hormander"] = rep.hormander;
  if (rep.homogeneous) j["homogeneous"] = *rep.homogeneous;
  if (rep.radial) j["radial"] = *rep.radial;
  if (rep.empirical_norm) j["empirical_norm"] = *rep.empirical_norm;
  auto table = [](const std::vector<BandTableRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json e;
      e["l"] = r.l;
      e["weight"] = r.weight;
      e["sup_x_norm"] = r.sup_x_norm;
      e["term"] = r.term;
      arr.push_back(e);
    }
    return arr;
  };
  j["b2_bands"] = table(rep.b2_table);
  j["b1_bands"] = table(rep.b1_table);
  return j;
}

}  // namespace rpdo
