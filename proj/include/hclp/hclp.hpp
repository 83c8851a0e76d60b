#ifndef HCLP_HCLP_HPP
#define HCLP_HCLP_HPP

// The reasoning engine without the file formats and command line.

#include "hclp/combiner.hpp"
#include "hclp/cost_table.hpp"
#include "hclp/error.hpp"
#include "hclp/lex_engine.hpp"
#include "hclp/model.hpp"
#include "hclp/oracle.hpp"
#include "hclp/ordering.hpp"
#include "hclp/rational.hpp"
#include "hclp/sat_reduction.hpp"
#include "hclp/semantics.hpp"
#include "hclp/statement.hpp"

#endif  // HCLP_HCLP_HPP
