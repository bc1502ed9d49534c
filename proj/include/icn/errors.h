#ifndef ICN_ERRORS_H_
#define ICN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace icn {

// A model or solver parameter failed validation. field() names the offending
// parameter so front ends can report it verbatim.
class InvalidParameter : public std::invalid_argument {
 public:
  InvalidParameter(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Content rank or threshold index outside its admissible range.
class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An exhaustive search was asked to exceed its enumeration budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace icn

#endif  // ICN_ERRORS_H_
