#pragma once

#include "sgwt/chebyshev.hpp"
#include "sgwt/coefficients.hpp"
#include "sgwt/error.hpp"
#include "sgwt/graph.hpp"
#include "sgwt/io.hpp"
#include "sgwt/kernels.hpp"
#include "sgwt/laplacian.hpp"
#include "sgwt/random.hpp"
#include "sgwt/spectral.hpp"
#include "sgwt/transform.hpp"
