'''
This package contains the processors that implement the ``gammaflow.core.node.ProcessorNode`` \
    interface
'''
from .certification import CertificationProcessor
