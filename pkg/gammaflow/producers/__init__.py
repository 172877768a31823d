'''
This package contains the producers that implement the ``gammaflow.core.node.ProducerNode`` \
    interface
'''
from .jobs import CertificationJobProducer
