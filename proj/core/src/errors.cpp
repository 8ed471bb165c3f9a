#include "fresnel/errors.hpp"

#include <sstream>

namespace fresnel::detail {

void throw_domain(const std::string& name, double value, const std::string& requirement) {
  std::ostringstream out;
  out.precision(17);
  out << name << " = " << value << " " << requirement;
  throw DomainError(out.str());
}

}  // namespace fresnel::detail
