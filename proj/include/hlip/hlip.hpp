#pragma once

#include "corpus.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "function.hpp"
#include "modulus.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "specfun.hpp"
#include "titchmarsh.hpp"
#include "transform.hpp"
