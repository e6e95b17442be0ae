#include "sandwich/report.hpp"

namespace sandwich {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "skipped";
}

}  // namespace sandwich
