#ifndef NRK_ERRORS_HPP
#define NRK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nrk {

/* Every failure raised by the library derives from nrk::error. The CLI maps
 * the three top-level families onto exit codes: format/schema -> 1,
 * domain -> 2, precision -> 3. */
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    virtual const char* code() const noexcept = 0;
};

/* malformed input: non-monic polynomial, bad rational literal, bad schema */
class format_error : public error {
  public:
    using error::error;
    const char* code() const noexcept override { return "format"; }
};

/* a mathematical precondition does not hold */
class domain_error : public error {
  public:
    using error::error;
    const char* code() const noexcept override { return "domain"; }
};

class arithmetic_error : public domain_error {
  public:
    using domain_error::domain_error;
    const char* code() const noexcept override { return "arithmetic"; }
};

class squarefree_error : public domain_error {
  public:
    using domain_error::domain_error;
    const char* code() const noexcept override { return "squarefree"; }
};

class membership_error : public domain_error {
  public:
    using domain_error::domain_error;
    const char* code() const noexcept override { return "membership"; }
};

class principality_error : public domain_error {
  public:
    using domain_error::domain_error;
    const char* code() const noexcept override { return "principality"; }
};

/* the multiplicative presentation does not contain the requested element */
class presentation_incomplete_error : public domain_error {
  public:
    using domain_error::domain_error;
    const char* code() const noexcept override { return "presentation-incomplete"; }
};

/* numerical data was not accurate enough; retrying at higher precision may help */
class precision_error : public error {
  public:
    using error::error;
    const char* code() const noexcept override { return "precision"; }
};

class degenerate_embedding_error : public precision_error {
  public:
    using precision_error::precision_error;
    const char* code() const noexcept override { return "degenerate-embedding"; }
};

}  // namespace nrk

#endif
