#pragma once

#include "contact/complexify/field.hpp"
#include "contact/complexify/operators.hpp"
#include "contact/complexify/tube.hpp"
