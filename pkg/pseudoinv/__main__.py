import sys

from pseudoinv.cli import main

sys.exit(main())
