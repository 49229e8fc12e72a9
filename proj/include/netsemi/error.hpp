// error.hpp -- error codes and exception type shared by all modules.

#ifndef NETSEMI_ERROR_HPP
#define NETSEMI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace netsemi {

enum class Errc {
  parse_error,
  empty_source_or_range,
  source_range_overlap,
  duplicate_relation_name,
  unknown_vertex,
  empty_word,
  not_a_path,
  budget_exceeded,
  non_canonical_operand,
  zero_operand,
  not_regular_operand,
  not_idempotent,
  hypothesis_violated,
  ideal_check_failed,
  insufficient_ball,
  unsupported_network,
  usage_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace netsemi

#endif  // NETSEMI_ERROR_HPP
