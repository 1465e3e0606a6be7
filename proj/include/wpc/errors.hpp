#pragma once
#include <stdexcept>
#include <string>

namespace wpc {

/* failure classes; the CLI maps each kind to its process exit code */
enum class errkind {
  internal,         /* invariant violation, always a bug */
  bad_input,        /* malformed user input */
  not_supported,    /* input outside the supported regimes       -> exit 2 */
  non_bass,         /* multiplicator/base order is not Bass      -> exit 3 */
  indeterminate,    /* certified numeric check hit precision cap -> exit 4 */
  effort_exceeded,  /* search budget exhausted                   -> exit 5 */
};

struct wpc_error : std::runtime_error {
  errkind kind;
  wpc_error(errkind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(errkind k, const std::string& msg) { throw wpc_error(k, msg); }

/* internal consistency check that must never fire on valid state */
inline void check(bool ok, const char* msg) {
  if (!ok) throw wpc_error(errkind::internal, std::string("internal error: ") + msg);
}

}
