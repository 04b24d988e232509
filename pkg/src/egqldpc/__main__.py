import sys

from egqldpc.cli import main

sys.exit(main())
