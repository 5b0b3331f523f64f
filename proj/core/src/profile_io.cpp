#include "isoperim/profile_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace isoperim {

namespace {
std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}
}  // namespace

void write_profile_csv(std::ostream& os, const iso_profile& p) {
  os << "V,A\n";
  const auto& v = p.volumes();
  const auto& a = p.areas();
  for (std::size_t i = 0; i < v.size(); ++i)
    os << fmt(v[i]) << ',' << fmt(a[i]) << '\n';
  switch (p.end().k) {
    case end_descriptor::kind::schwarzschild:
      os << "# end=schwarzschild m=" << fmt(p.end().mass) << '\n';
      break;
    case end_descriptor::kind::compact:
      os << "# end=compact\n";
      break;
    case end_descriptor::kind::none:
      break;
  }
}

void write_profile_csv(const std::string& path, const iso_profile& p) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_profile_csv(os, p);
}

iso_profile read_profile_csv(std::istream& is) {
  std::string line;
  int lineno = 0;
  if (!std::getline(is, line)) throw csv_parse_error("empty profile file", 1);
  ++lineno;
  if (line != "V,A" && line != "V,A\r")
    throw csv_parse_error("expected header 'V,A'", lineno);

  std::vector<double> v, a;
  end_descriptor end = end_descriptor::open_end();
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string tag;
      meta >> tag;
      if (tag.rfind("end=", 0) == 0) {
        const std::string kind = tag.substr(4);
        if (kind == "schwarzschild") {
          std::string mtok;
          meta >> mtok;
          if (mtok.rfind("m=", 0) != 0)
            throw csv_parse_error("schwarzschild end needs m=<value>", lineno);
          try {
            end = end_descriptor::schwarzschild_end(std::stod(mtok.substr(2)));
          } catch (const std::exception&) {
            throw csv_parse_error("bad mass value in metadata", lineno);
          }
        } else if (kind == "compact") {
          end = end_descriptor::compact_end();
        } else {
          throw csv_parse_error("unknown end descriptor '" + kind + "'", lineno);
        }
      }
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw csv_parse_error("expected 'V,A' row", lineno);
    try {
      v.push_back(std::stod(line.substr(0, comma)));
      a.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw csv_parse_error("bad numeric field", lineno);
    }
    if (v.size() > 1 && !(v.back() > v[v.size() - 2]))
      throw csv_parse_error("V must be strictly increasing", lineno);
  }
  if (v.size() < 4) throw csv_parse_error("need at least 4 rows", lineno);
  try {
    return iso_profile::from_samples(std::move(v), std::move(a), end);
  } catch (const std::invalid_argument& e) {
    throw csv_parse_error(e.what(), lineno);
  }
}

iso_profile read_profile_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_profile_csv(is);
}

}  // namespace isoperim
