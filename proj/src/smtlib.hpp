// Reader/writer for the SMT-LIB v2 subset used by the toolkit (QF_BV plus
// the check-allsat / allsat-relevant extension commands).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "term.hpp"

namespace lc::smtlib {

enum class CommandKind {
  CheckSat,
  CheckAllSat,       // args = important variable names
  AllSatRelevant,    // args = relevant variable names
  GetModel,
  Push,
  Pop,               // count in `count`
  Exit,
};

struct Command {
  CommandKind kind;
  std::vector<std::string> args;
  int count = 1;
};

struct Script {
  // Declarations in order of appearance; every name is 0-ary.
  std::vector<std::pair<std::string, Sort>> decls;
  std::vector<Term> assertions;
  std::vector<Command> commands;
  // Position of each assertion / command in the original interleaving:
  // entry (isCommand, index into the respective vector).
  std::vector<std::pair<bool, size_t>> order;
};

Script parse(TermManager& tm, const std::string& text, const std::string& filename = "<smt2>");

std::string emitTerm(Term t);
// Canonical form: lowercase keywords, one command per line, declarations
// before first use, deterministic ordering.
std::string emitScript(const Script& s);
std::string emitSort(Sort s);
std::string emitValue(Sort s, uint64_t v);

}  // namespace lc::smtlib
