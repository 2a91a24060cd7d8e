#include <sstream>
#include <string>

#include "job.hpp"

namespace chern::cli {

namespace {

bool is_flat(const Json& j) {
  if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_structured()) return false;
    }
    return true;
  }
  return !j.is_object();
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar(j[i]);
    return out + "]";
  }
  return j.dump();
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        os << pad << key << ": " << scalar(value) << "\n";
      } else {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        os << pad << "- " << scalar(e) << "\n";
      } else {
        os << pad << "-\n";
        render(os, e, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

}  // namespace chern::cli
