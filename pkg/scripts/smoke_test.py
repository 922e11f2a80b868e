import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from delcat.main import main as delcat_main


def main():
    code = delcat_main(['verify', 'all'])
    if code != 0:
        print('SMOKE_FAILED')
        sys.exit(code)
    print('SMOKE_OK')


if __name__ == '__main__':
    main()
