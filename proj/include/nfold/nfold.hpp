#pragma once

// Everything in one include.

#include "nfold/base_field.hpp"
#include "nfold/base_poly.hpp"
#include "nfold/base_matrix.hpp"
#include "nfold/factor.hpp"
#include "nfold/classical_forms.hpp"
#include "nfold/nnum.hpp"
#include "nfold/npoly.hpp"
#include "nfold/nmatrix.hpp"
#include "nfold/text.hpp"
#include "nfold/error.hpp"
#include "nfold/spectral.hpp"
#include "nfold/nspace.hpp"
#include "nfold/inner.hpp"
#include "nfold/group_scan.hpp"
#include "nfold/documents.hpp"
#include "nfold/random.hpp"
#include "nfold/roundtrip.hpp"
#include "nfold/verify.hpp"
#include "nfold/corpus.hpp"
