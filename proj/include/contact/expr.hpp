#pragma once

#include "contact/expr/ast.hpp"
#include "contact/expr/evaluate.hpp"
#include "contact/expr/jet.hpp"
#include "contact/expr/parser.hpp"
