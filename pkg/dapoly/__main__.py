import sys

from dapoly.cli import main

sys.exit(main())
