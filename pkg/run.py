import logging
import os
import sys

import yaml

from tin_common.config import load_config
from tin_common.errors import TinError, exit_code_of
from tin_cli.commands import GRAPH_COMMANDS, build_command, load_graphs

os.chdir(os.path.dirname(os.path.realpath(__file__)))

if __name__ == '__main__':
    config_url = sys.argv[1] if len(sys.argv) > 1 else "./conf-survey.yaml"
    CONF = yaml.safe_load(open(config_url))
    config = load_config(config_url)
    logging.basicConfig(format="[%(levelname)s] %(name)s: %(message)s", level=config['log_level'])
    logger = logging.getLogger("run")

    status = 0
    for item in CONF.get('commands') or []:
        options = {key: None if value == 'None' else value for key, value in (item.get('options') or {}).items()}
        try:
            command = build_command(item['name'], config, options)
            if item['name'] in GRAPH_COMMANDS:
                graphs, inputs = load_graphs(item.get('inputs') or [], config['format'], item.get('generate'))
                report = command.run(graphs, inputs)
            else:
                report = command.run()
            report.write(item.get('out', command.default_out), item.get('out_file'), sys.stdout)
            status = status or report.exit_code
        except TinError as err:
            logger.error(f"{item['name']}: {err}")
            status = status or exit_code_of(err)
    sys.exit(status)
