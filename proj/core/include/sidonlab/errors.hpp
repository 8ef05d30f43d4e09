#ifndef SIDONLAB_ERRORS_HPP
#define SIDONLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sidonlab {

// Every domain failure maps to one of these codes. The CLI translates any
// thrown Error into exit code 1; usage problems never reach this type.
enum class Errc {
    NotPrime,
    NotIrreducible,
    FieldMismatch,
    DivisionByZero,
    CharTwo,
    CharAtMostThree,
    SyntaxError,
    CoefficientOutOfRange,
    DuplicateNode,
    ZeroPolynomial,
    ConstantPolynomial,
    DegreeOutOfRange,
    NotCubic,
    NotPermutation,
    NotSidon,
    NotPrimeField,
    ZeroC,
    TooLarge,
    UnsupportedFormat,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

// Parser diagnostics carry the byte offset of the offending character.
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(Errc::SyntaxError, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sidonlab

#endif
