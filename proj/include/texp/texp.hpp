#pragma once

#include "bounds.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "integer.hpp"
#include "interval.hpp"
#include "json_io.hpp"
#include "lemma_lab.hpp"
#include "solution_checks.hpp"
#include "survey.hpp"
