import sys

from hypersample.cli import main

sys.exit(main())
