#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "isoperim/profile.hpp"

namespace isoperim {

/// Parse failure with the 1-based offending line.
class csv_parse_error : public std::runtime_error {
public:
  csv_parse_error(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

/// Profile file format: header "V,A", rows in strictly increasing V with
/// >= 12 significant digits, optional trailing metadata lines beginning
/// with '#': "# end=schwarzschild m=<value>" or "# end=compact".
void write_profile_csv(std::ostream& os, const iso_profile& p);
void write_profile_csv(const std::string& path, const iso_profile& p);
iso_profile read_profile_csv(std::istream& is);
iso_profile read_profile_csv(const std::string& path);

}  // namespace isoperim
