#pragma once

#include <stdexcept>
#include <string>

namespace critic {

// Error codes shared between the C++ core and the C API surface.
enum class Err {
  Ok = 0,
  OutOfRange,        // vertex index outside [0, n)
  SelfLoop,
  Malformed,         // unparsable graph6 / JSON / family spec
  UnsupportedOrder,  // graph order outside what an operation supports
  BadParam,
  NotAnEdge,
  UnknownEdge,       // coloring mentions an edge the graph does not have
  NotBipartite,
  TooLarge,
  Feasibility,       // coloring does not satisfy a required feasibility shape
  InvalidPath,
  InvalidBroom,
  BudgetExhausted,
  IoError,
  Internal,
};

class CriticError : public std::runtime_error {
 public:
  CriticError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw CriticError(code, what); }

}  // namespace critic
